#pragma once

#include <cstddef>

namespace nadslab {

// Every operation that materializes a symbol prefix is bounded by a single
// process-wide cap. Exceeding it raises CapExceeded; nothing ever truncates
// silently. The cap is set once at startup (CLI flag or NADSLAB_CAP) and
// read concurrently afterwards.
inline constexpr std::size_t default_materialization_cap = std::size_t{1} << 22;

std::size_t materialization_cap();
void set_materialization_cap(std::size_t cap);

// Throws CapExceeded when `requested` symbols would exceed the cap.
void check_cap(std::size_t requested);

} // namespace nadslab
