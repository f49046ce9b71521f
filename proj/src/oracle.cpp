#include "nadslab/oracle.hpp"

#include "nadslab/errors.hpp"

#include <bit>

namespace nadslab {
namespace oracle {

int tm_parity(std::uint64_t i)
{
    if (i == 0) {
        throw Error("tm_parity is 1-based");
    }
    return std::popcount(i - 1) & 1;
}

namespace {

std::uint64_t step_drop(const Schedule& s, std::uint64_t i)
{
    switch (s.kind()) {
    case ScheduleKind::thue_morse:
        return 1 + static_cast<std::uint64_t>(tm_parity(i));
    case ScheduleKind::explicit_list:
        return std::uint64_t{s.index_at(i)} + 1;
    case ScheduleKind::quad_exponent:
        throw WrongSystem("quad-exponent schedules drive rotation points, not words");
    }
    throw Error("unreachable schedule kind");
}

} // namespace

Word naive_orbit(const Word& truncated, const Schedule& s, std::uint64_t n)
{
    Word current = truncated;
    for (std::uint64_t i = 1; i <= n; ++i) {
        const std::uint64_t drop = step_drop(s, i);
        if (drop > current.size()) {
            throw TruncationExhausted("ran out of symbols at step " + std::to_string(i) +
                                      " of " + std::to_string(n));
        }
        current = current.subword(static_cast<std::size_t>(drop) + 1,
                                  current.size() - static_cast<std::size_t>(drop));
    }
    return current;
}

std::vector<bool> exhaustive_mixing(const Cylinder& u, const Cylinder& v,
                                    std::uint64_t n_max)
{
    std::vector<bool> meets;
    meets.reserve(static_cast<std::size_t>(n_max) + 1);
    std::uint64_t total_shift = 0;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        if (n > 0) {
            total_shift += 1 + static_cast<std::uint64_t>(tm_parity(n));
        }
        // A witness in u landing in v must carry base(v) at positions
        // total_shift+1 .. total_shift+|v|; the only obstruction is a
        // disagreement with base(u) where those positions overlap it.
        bool witness_exists = true;
        for (std::size_t i = 1; i <= v.base().size(); ++i) {
            const std::uint64_t position = total_shift + i;
            if (position <= u.base().size() &&
                u.base().symbol(static_cast<std::size_t>(position)) != v.base().symbol(i)) {
                witness_exists = false;
                break;
            }
        }
        meets.push_back(witness_exists);
    }
    return meets;
}

std::pair<Rational, Rational> rational_metric_series(const Point& x, const Point& y,
                                                     std::uint64_t T)
{
    if (T == 0) {
        throw Error("series bracket needs T >= 1");
    }
    Rational lower(0);
    for (std::uint64_t i = 1; i <= T; ++i) {
        if (x.symbol_at(i) != y.symbol_at(i)) {
            lower += dyadic(i);
        }
    }
    return {lower, lower + dyadic(T)};
}

} // namespace oracle
} // namespace nadslab
