#pragma once

#include "nadslab/point.hpp"
#include "nadslab/schedule.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace nadslab {

// f_1^(n)(x), the n-step composite from step 1. Thue-Morse and explicit
// schedules compose to a single shift power (sigma^{S(n)}), which is what
// makes evaluation exact at any n within the cap. Quad-exponent schedules
// act on rotation points, not sequences; passing one here throws
// WrongSystem.
Point evaluate(const Schedule& s, const Point& x, std::uint64_t n);

// [x, f_1^(1)(x), ..., f_1^(N)(x)]
std::vector<Point> orbit(const Schedule& s, const Point& x, std::uint64_t N);

struct PeriodicityCheck {
    std::uint64_t multiple; // k
    std::uint64_t shift;    // S(n * k)
    bool holds;             // f_1^(n k)(x) == x
};

// Finite verification of the infinite condition "f_1^(nk)(x) = x for all
// k": every multiple up to the horizon is checked and recorded. When the
// schedule is Thue-Morse, n = 2|A_j| for some j, the point is purely
// periodic, and its period length divides 3|A_j|, the identity
// S(2k|A_j|) = 3k|A_j| upgrades the finite check to a proof; the
// implied_by_checkpoint flag records that.
struct PeriodicityCertificate {
    std::string schedule;
    std::string point;
    std::uint64_t n = 0;
    std::uint64_t horizon = 0;
    bool periodic = false;
    bool implied_by_checkpoint = false;
    std::vector<PeriodicityCheck> checks; // one per k in [0, horizon]
};

PeriodicityCertificate is_periodic_point(const Schedule& s, const Point& x,
                                         std::uint64_t n, std::uint64_t horizon);

// Re-runs every recorded check from scratch; true iff each one reproduces
// its recorded shift and outcome and the verdict matches.
bool replay_periodicity(const PeriodicityCertificate& cert);

// The set {f_1^(n)(x) : n >= 0}, enumerated to closure: enumeration stops
// once a full sweep window passes with no new point (the orbit of an
// eventually periodic point has at most preperiod + period + 1 elements,
// so the window is sized from those lengths). Throws OrbitNotClosed if the
// point cap is hit first. A finite explicit schedule simply ends the
// enumeration.
std::set<Point> orbit_set(const Schedule& s, const Point& x);

// Definition of invariance for the orbit of x under the Thue-Morse system:
// every generator (sigma^g for g in generator_shifts) maps the orbit set
// into itself.
bool is_invariant_orbit(const Point& x, const std::vector<std::uint64_t>& generator_shifts);

// Whether the Thue-Morse orbit sets of x and y share no point.
bool orbits_disjoint(const Point& x, const Point& y);

} // namespace nadslab
