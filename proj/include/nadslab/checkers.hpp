#pragma once

#include "nadslab/cylinder.hpp"
#include "nadslab/engine.hpp"
#include "nadslab/point.hpp"
#include "nadslab/rational.hpp"
#include "nadslab/report.hpp"

#include <cstdint>
#include <vector>

namespace nadslab {

// Minimal N with: for every n >= N the n-step image of u meets v. The
// composite shift S(n) is at least n, so images at n >= |base(u)| are the
// whole space; only the finitely many n below that need a pointwise check,
// and N never exceeds |base(u)|. The certificate records the outcome at
// every n below |base(u)| plus the tail argument.
struct MixingResult {
    std::uint64_t threshold = 0;
    Report certificate;
};

MixingResult mixing_threshold(const Cylinder& u, const Cylinder& v);

// mixing_threshold over every ordered pair of cylinders with base length
// at most resolution, summarized (pair count, largest threshold seen,
// whether every threshold respected its bound).
Report mixing_sweep(std::uint64_t resolution);

// Builds the periodic point eta = A^inf from the block A = x_1..x_{3|A_n|}
// and certifies: d(x, eta) <= 2^-(3|A_n|) exactly; eta is periodic for the
// Thue-Morse system with step 2|A_n| up to the horizon; the checkpoint
// identity holds at this n for every k up to the horizon.
struct Claim2Result {
    Point eta;
    Rational distance;
    PeriodicityCertificate periodicity;
    Report certificate;
};

Claim2Result verify_claim2(const Point& x, unsigned n, std::uint64_t horizon);

// Runs verify_claim2 on the center w 0^inf of every cylinder [w] with
// |w| = resolution and additionally certifies eta lands inside [w].
// Requires 3|A_n| >= resolution so the constructed block covers the base.
Report dense_periodic_points(std::uint64_t resolution, unsigned n, std::uint64_t horizon);

// The two constant points: both fixed at every step up to
// fixed_point_steps, both orbits invariant under {sigma, sigma^2}, orbits
// disjoint, and their distance exactly 1.
Report verify_claim3(std::uint64_t fixed_point_steps = 10000);

// Perturbation that the system magnifies to distance exactly 1/2: y copies
// x through symbol S(n) and flips symbol S(n)+1 (tail unchanged), so
// d(x, y) = 2^-(S(n)+1) < 2^-m while the n-step images differ at their
// first symbol. n is chosen as m itself.
struct SensitivityWitness {
    Point y;
    std::uint64_t n = 0;
    Rational pre_distance;
    Rational post_distance;
};

SensitivityWitness sensitivity_witness(const Point& x, std::uint64_t m);

Report sensitivity_report(const Point& x, std::uint64_t m);

// A single point whose orbit visits every cylinder of the given length:
// the j-th word of {0,1}^L is written at positions S(n_j)+1..S(n_j)+L for
// greedily chosen steps n_j whose shifts are at least L apart.
struct DenseOrbitResult {
    Point x;
    Report certificate;
};

DenseOrbitResult dense_orbit_point(std::uint64_t resolution);

// Exercises the alternating-exponent system on a fixed set of rotation
// points: invariant periodicity certificates at the horizon plus pairwise
// orbit disjointness decisions.
Report rotation_system_report(std::uint64_t horizon);

struct BanksConfig {
    std::uint64_t resolution = 6;          // cylinder length for density sweeps
    unsigned block_index = 3;              // n in the periodic-approximation checks
    std::uint64_t horizon = 50;            // K for periodicity certificates
    std::uint64_t fixed_point_steps = 10000;
    std::uint64_t aperiodicity_max_period = 256;
    std::uint64_t aperiodicity_prefix_length = 4096;
};

// One consolidated report over the Thue-Morse shift system: transitivity
// evidence (dense orbit + mixing sweep), dense periodic points, the two
// disjoint invariant fixed orbits, finite generation of the schedule,
// schedule aperiodicity, and a sensitivity-witness grid. Verdicts are
// finite-resolution evidence and the report says so; falsified sub-checks
// mark their section failed rather than throwing.
Report banks_hypotheses_report(const BanksConfig& config = {});

// Assembly seam: combines prebuilt sections into the consolidated report,
// overall verdict = conjunction. banks_hypotheses_report delegates here,
// and tests use it to exercise failure propagation.
Report assemble_banks_report(const BanksConfig& config, std::vector<Report> sections);

} // namespace nadslab
