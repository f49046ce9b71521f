#include "nadslab/config.hpp"

#include "nadslab/errors.hpp"

#include <atomic>

namespace nadslab {

namespace {
std::atomic<std::size_t> g_cap{default_materialization_cap};
}

std::size_t materialization_cap()
{
    return g_cap.load(std::memory_order_relaxed);
}

void set_materialization_cap(std::size_t cap)
{
    g_cap.store(cap, std::memory_order_relaxed);
}

void check_cap(std::size_t requested)
{
    const std::size_t cap = materialization_cap();
    if (requested > cap) {
        throw CapExceeded(requested, cap);
    }
}

} // namespace nadslab
