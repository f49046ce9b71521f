#include "nadslab/engine.hpp"

#include "nadslab/errors.hpp"

#include <algorithm>

namespace nadslab {

namespace {

std::uint64_t composite_shift(const Schedule& s, std::uint64_t n)
{
    switch (s.kind()) {
    case ScheduleKind::thue_morse:
        return shift_amount(n);
    case ScheduleKind::explicit_list:
        return explicit_shift_amount(s, n);
    case ScheduleKind::quad_exponent:
        throw WrongSystem("quad-exponent schedules drive rotation points, not sequences");
    }
    throw Error("unreachable schedule kind");
}

bool is_pow2(std::uint64_t v)
{
    return v != 0 && (v & (v - 1)) == 0;
}

} // namespace

Point evaluate(const Schedule& s, const Point& x, std::uint64_t n)
{
    return shift(x, composite_shift(s, n));
}

std::vector<Point> orbit(const Schedule& s, const Point& x, std::uint64_t N)
{
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(N) + 1);
    for (std::uint64_t n = 0; n <= N; ++n) {
        points.push_back(evaluate(s, x, n));
    }
    return points;
}

PeriodicityCertificate is_periodic_point(const Schedule& s, const Point& x,
                                         std::uint64_t n, std::uint64_t horizon)
{
    if (n == 0) {
        throw Error("periodicity needs n >= 1");
    }
    PeriodicityCertificate cert;
    cert.schedule = s.str();
    cert.point = x.str();
    cert.n = n;
    cert.horizon = horizon;
    cert.periodic = true;
    cert.checks.reserve(static_cast<std::size_t>(horizon) + 1);
    for (std::uint64_t k = 0; k <= horizon; ++k) {
        const std::uint64_t amount = composite_shift(s, n * k);
        const bool holds = shift(x, amount) == x;
        cert.checks.push_back({k, amount, holds});
        cert.periodic = cert.periodic && holds;
    }
    if (cert.periodic && s.kind() == ScheduleKind::thue_morse && n >= 2 && is_pow2(n) &&
        x.preperiod().empty() && (3 * (n / 2)) % x.period().size() == 0) {
        // n = 2|A_j| and S(2k|A_j|) = 3k|A_j|, a multiple of the period
        // length for every k, so the finite verdict extends to all k.
        cert.implied_by_checkpoint = true;
    }
    return cert;
}

bool replay_periodicity(const PeriodicityCertificate& cert)
{
    const Schedule s = Schedule::parse(cert.schedule);
    const Point x = Point::parse(cert.point);
    if (cert.checks.size() != cert.horizon + 1) {
        return false;
    }
    bool all_hold = true;
    for (const PeriodicityCheck& check : cert.checks) {
        const std::uint64_t amount = composite_shift(s, cert.n * check.multiple);
        if (amount != check.shift) {
            return false;
        }
        const bool holds = shift(x, amount) == x;
        if (holds != check.holds) {
            return false;
        }
        all_hold = all_hold && holds;
    }
    return all_hold == cert.periodic;
}

std::set<Point> orbit_set(const Schedule& s, const Point& x)
{
    constexpr std::size_t point_cap = 10000;
    const std::uint64_t window =
        4 * (x.preperiod().size() + x.period().size()) + 64;

    std::set<Point> points;
    std::uint64_t since_new = 0;
    for (std::uint64_t n = 0; since_new < window; ++n) {
        Point next = x;
        try {
            next = evaluate(s, x, n);
        } catch (const ScheduleExhausted&) {
            break;
        }
        if (points.insert(std::move(next)).second) {
            since_new = 0;
            if (points.size() > point_cap) {
                throw OrbitNotClosed("orbit of " + x.str() + " exceeded " +
                                     std::to_string(point_cap) + " points");
            }
        } else {
            ++since_new;
        }
    }
    return points;
}

bool is_invariant_orbit(const Point& x, const std::vector<std::uint64_t>& generator_shifts)
{
    const std::set<Point> points = orbit_set(Schedule::thue_morse(), x);
    for (const Point& p : points) {
        for (std::uint64_t g : generator_shifts) {
            if (!points.contains(shift(p, g))) {
                return false;
            }
        }
    }
    return true;
}

bool orbits_disjoint(const Point& x, const Point& y)
{
    const std::set<Point> a = orbit_set(Schedule::thue_morse(), x);
    const std::set<Point> b = orbit_set(Schedule::thue_morse(), y);
    return std::none_of(a.begin(), a.end(),
                        [&](const Point& p) { return b.contains(p); });
}

} // namespace nadslab
