#pragma once

#include "nadslab/cylinder.hpp"
#include "nadslab/point.hpp"
#include "nadslab/rational.hpp"
#include "nadslab/schedule.hpp"
#include "nadslab/word.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace nadslab {
// Deliberately slow reference implementations, structurally unrelated to
// the engines they validate (different recursion shape, different data
// layout). Production code paths never call into this namespace; only
// tests and equivalence suites do.
namespace oracle {

// xi_i as the parity of the ones in the binary expansion of i - 1. The
// engine builds the sequence by block doubling instead; the two must agree
// everywhere.
int tm_parity(std::uint64_t i);

// Symbol-by-symbol simulation of n schedule steps on a truncated point:
// each step literally deletes 1 or 2 leading symbols, never consulting the
// composite shift table. Throws TruncationExhausted when the word runs
// out of symbols.
Word naive_orbit(const Word& truncated, const Schedule& s, std::uint64_t n);

// result[n] says whether the n-step image of u meets v, for n = 0..n_max,
// decided by attempting to build an explicit witness word that lies in u
// and lands in v after the accumulated shift. Shift amounts are re-derived
// from tm_parity, independent of the engine's prefix-sum table.
std::vector<bool> exhaustive_mixing(const Cylinder& u, const Cylinder& v,
                                    std::uint64_t n_max);

// (partial sum to T terms, partial sum + 2^-T): an exact bracket around
// the series defining the metric. The closed-form metric must land inside.
std::pair<Rational, Rational> rational_metric_series(const Point& x, const Point& y,
                                                     std::uint64_t T);

} // namespace oracle
} // namespace nadslab
