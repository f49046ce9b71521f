#include "nadslab/checkers.hpp"

#include "nadslab/config.hpp"
#include "nadslab/errors.hpp"
#include "nadslab/rotation.hpp"
#include "nadslab/schedule.hpp"
#include "nadslab/word.hpp"

#include <iterator>
#include <limits>
#include <string>
#include <utility>

namespace nadslab {

namespace {

// The j-th word of {0,1}^length in lexicographic order, j = value.
Word word_from_index(std::uint64_t value, std::uint64_t length)
{
    Word w;
    for (std::uint64_t i = 0; i < length; ++i) {
        const std::uint64_t bit_position = length - 1 - i;
        w.append(static_cast<int>((value >> bit_position) & 1));
    }
    return w;
}

std::uint64_t mixing_threshold_value(const Cylinder& u, const Cylinder& v)
{
    std::uint64_t threshold = 0;
    for (std::uint64_t n = 0; n < u.base().size(); ++n) {
        if (!cylinders_intersect(cylinder_image(u, shift_amount(n)), v)) {
            threshold = n + 1;
        }
    }
    return threshold;
}

Report finite_generation_report()
{
    const Schedule tm = Schedule::thue_morse();
    Report r;
    r.claim = "the driving schedule draws from a finite generator set";
    r.parameters = {{"schedule", tm.str()}};
    const bool finite = tm.finitely_generated();
    const std::uint64_t count = tm.generator_count();
    r.checked_items.push_back(Json{{"item", "finitely_generated"}, {"holds", finite}});
    r.checked_items.push_back(
        Json{{"item", "generator_count"}, {"count", count}, {"holds", count == 2}});
    r.notes = {"generators are the shifts by 1 and by 2 symbols"};
    r.pass = finite && count == 2;
    return r;
}

Report aperiodicity_report(const BanksConfig& config)
{
    Report r;
    r.claim = "the schedule index sequence is not eventually periodic up to the scanned period";
    r.parameters = {
        {"max_period", std::to_string(config.aperiodicity_max_period)},
        {"prefix_length", std::to_string(config.aperiodicity_prefix_length)}};
    try {
        const AperiodicityReport scan = schedule_aperiodicity(
            config.aperiodicity_max_period, config.aperiodicity_prefix_length);
        r.checked_items.push_back(Json{{"item", "witness_per_period"},
                                       {"periods_checked", scan.witnesses.size()},
                                       {"holds", true}});
        for (std::size_t i = 0; i < scan.witnesses.size() && i < 4; ++i) {
            r.witnesses.push_back(Json{{"period", scan.witnesses[i].period},
                                       {"first_disagreement", scan.witnesses[i].index}});
        }
        r.pass = true;
    } catch (const NoWitnessFound& e) {
        r.checked_items.push_back(Json{{"item", "witness_per_period"},
                                       {"failing_period", e.period()},
                                       {"holds", false}});
        r.notes.push_back("no disagreement found for period " + std::to_string(e.period()) +
                          "; the sequence looks periodic at the scanned prefix");
        r.pass = false;
    }
    return r;
}

Report sensitivity_grid_report()
{
    const char* const points[] = {"(0)", "(1)", "(01)", "(011)", "0(10)"};
    const std::uint64_t scales[] = {1, 2, 4, 8, 16};
    Report r;
    r.claim = "perturbation witnesses separate to distance one half across a sample grid";
    r.parameters = {{"grid_points", std::to_string(std::size(points))},
                    {"grid_scales", std::to_string(std::size(scales))}};
    r.pass = true;
    for (const char* text : points) {
        const Point x = Point::parse(text);
        for (std::uint64_t m : scales) {
            const SensitivityWitness w = sensitivity_witness(x, m);
            const bool close = w.pre_distance < dyadic(m);
            const bool separated = w.post_distance >= Rational(1, 2);
            r.checked_items.push_back(Json{{"point", x.str()},
                                           {"m", m},
                                           {"n", w.n},
                                           {"y", w.y.str()},
                                           {"pre_distance", to_fraction_string(w.pre_distance)},
                                           {"post_distance", to_fraction_string(w.post_distance)},
                                           {"holds", close && separated}});
            r.pass = r.pass && close && separated;
        }
    }
    r.notes = {"separation constant is uniform: the first post-shift symbol is flipped"};
    return r;
}

} // namespace

MixingResult mixing_threshold(const Cylinder& u, const Cylinder& v)
{
    const std::uint64_t bound = u.base().size();
    Report cert;
    cert.claim = "forward images of the source cylinder meet the target from the threshold on";
    std::uint64_t threshold = 0;
    for (std::uint64_t n = 0; n < bound; ++n) {
        const std::uint64_t amount = shift_amount(n);
        const bool meets = cylinders_intersect(cylinder_image(u, amount), v);
        if (!meets) {
            threshold = n + 1;
        }
        cert.checked_items.push_back(
            Json{{"n", n}, {"shift", amount}, {"meets", meets}});
    }
    cert.parameters = {{"source", u.str()},
                       {"target", v.str()},
                       {"threshold", std::to_string(threshold)}};
    cert.notes = {"for n >= " + std::to_string(bound) +
                  " the composite deletes at least the whole source base, the image is the "
                  "full space, and every later step meets the target"};
    cert.pass = true;
    return {threshold, std::move(cert)};
}

Report mixing_sweep(std::uint64_t resolution)
{
    Report r;
    r.claim = "every cylinder pair at this resolution meets from some finite step on";
    r.parameters = {{"resolution", std::to_string(resolution)}};
    std::uint64_t pairs = 0;
    std::uint64_t max_threshold = 0;
    bool all_bounded = true;
    for (std::uint64_t lu = 0; lu <= resolution; ++lu) {
        for (std::uint64_t iu = 0; iu < (std::uint64_t{1} << lu); ++iu) {
            const Cylinder u(word_from_index(iu, lu));
            for (std::uint64_t lv = 0; lv <= resolution; ++lv) {
                for (std::uint64_t iv = 0; iv < (std::uint64_t{1} << lv); ++iv) {
                    const Cylinder v(word_from_index(iv, lv));
                    const std::uint64_t threshold = mixing_threshold_value(u, v);
                    max_threshold = std::max(max_threshold, threshold);
                    all_bounded = all_bounded && threshold <= u.base().size();
                    ++pairs;
                }
            }
        }
    }
    r.checked_items.push_back(Json{{"item", "thresholds_bounded_by_source_length"},
                                   {"pairs_checked", pairs},
                                   {"max_threshold", max_threshold},
                                   {"holds", all_bounded}});
    r.pass = all_bounded;
    return r;
}

Claim2Result verify_claim2(const Point& x, unsigned n, std::uint64_t horizon)
{
    if (n < 1) {
        throw Error("block index must be >= 1");
    }
    const std::uint64_t half = std::uint64_t{1} << (n - 1); // |A_n|
    const std::uint64_t block_length = 3 * half;

    const Word block = x.prefix(block_length);
    Point eta(Word{}, block);
    const Rational distance = metric(x, eta);
    const bool close = distance <= dyadic(block_length);

    const PeriodicityCertificate periodicity =
        is_periodic_point(Schedule::thue_morse(), eta, 2 * half, horizon);

    bool checkpoints = true;
    for (std::uint64_t k = 0; k <= horizon; ++k) {
        checkpoints = checkpoints && checkpoint_identity(n, k);
    }

    Report cert;
    cert.claim = "a periodic point of the scheduled system lies within the block-length ball";
    cert.parameters = {{"point", x.str()},
                       {"n", std::to_string(n)},
                       {"block_length", std::to_string(block_length)},
                       {"horizon", std::to_string(horizon)}};
    cert.witnesses.push_back(
        Json{{"eta", eta.str()}, {"distance", to_fraction_string(distance)}});
    cert.checked_items.push_back(Json{{"item", "distance_within_bound"},
                                      {"bound", to_fraction_string(dyadic(block_length))},
                                      {"holds", close}});
    cert.checked_items.push_back(Json{{"item", "periodic_with_step_twice_block"},
                                      {"step", 2 * half},
                                      {"implied_by_checkpoint", periodicity.implied_by_checkpoint},
                                      {"holds", periodicity.periodic}});
    cert.checked_items.push_back(
        Json{{"item", "checkpoint_identity_up_to_horizon"}, {"holds", checkpoints}});
    cert.pass = close && periodicity.periodic && checkpoints;
    return {std::move(eta), distance, periodicity, std::move(cert)};
}

Report dense_periodic_points(std::uint64_t resolution, unsigned n, std::uint64_t horizon)
{
    if (n < 1) {
        throw Error("block index must be >= 1");
    }
    const std::uint64_t block_length = 3 * (std::uint64_t{1} << (n - 1));
    if (block_length < resolution) {
        throw Error("block length " + std::to_string(block_length) +
                    " cannot cover cylinders of length " + std::to_string(resolution));
    }
    Report r;
    r.claim = "every cylinder of the given length contains a verified periodic point";
    r.parameters = {{"resolution", std::to_string(resolution)},
                    {"n", std::to_string(n)},
                    {"horizon", std::to_string(horizon)}};
    r.pass = true;
    Word one_zero;
    one_zero.append(0);
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << resolution); ++idx) {
        const Word w = word_from_index(idx, resolution);
        const Point center(w, one_zero);
        const Claim2Result res = verify_claim2(center, n, horizon);
        const bool inside = point_in_cylinder(res.eta, Cylinder(w));
        r.checked_items.push_back(Json{{"word", w.str()},
                                       {"eta", res.eta.str()},
                                       {"distance", to_fraction_string(res.distance)},
                                       {"in_cylinder", inside},
                                       {"verified", res.certificate.pass}});
        r.pass = r.pass && inside && res.certificate.pass;
    }
    return r;
}

Report verify_claim3(std::uint64_t fixed_point_steps)
{
    const Point zero = Point::constant(0);
    const Point one = Point::constant(1);
    const Schedule tm = Schedule::thue_morse();

    bool both_fixed = true;
    for (std::uint64_t n = 0; n <= fixed_point_steps && both_fixed; ++n) {
        both_fixed = evaluate(tm, zero, n) == zero && evaluate(tm, one, n) == one;
    }
    const std::vector<std::uint64_t> generators = {1, 2};
    const bool invariant_zero = is_invariant_orbit(zero, generators);
    const bool invariant_one = is_invariant_orbit(one, generators);
    const bool disjoint = orbits_disjoint(zero, one);
    const Rational distance = metric(zero, one);
    const bool unit_distance = distance == 1;

    Report r;
    r.claim = "the two constant points are disjoint invariant fixed orbits at unit distance";
    r.parameters = {{"fixed_point_steps", std::to_string(fixed_point_steps)}};
    r.witnesses.push_back(Json{{"x", zero.str()}, {"y", one.str()}});
    r.checked_items.push_back(
        Json{{"item", "fixed_at_every_step"}, {"holds", both_fixed}});
    r.checked_items.push_back(Json{{"item", "orbits_invariant_under_generators"},
                                   {"holds", invariant_zero && invariant_one}});
    r.checked_items.push_back(Json{{"item", "orbits_disjoint"}, {"holds", disjoint}});
    r.checked_items.push_back(Json{{"item", "distance_exactly_one"},
                                   {"distance", to_fraction_string(distance)},
                                   {"holds", unit_distance}});
    r.pass = both_fixed && invariant_zero && invariant_one && disjoint && unit_distance;
    return r;
}

SensitivityWitness sensitivity_witness(const Point& x, std::uint64_t m)
{
    if (m < 1) {
        throw Error("sensitivity scale must be >= 1");
    }
    const std::uint64_t n = m;
    const std::uint64_t s = shift_amount(n);

    Word head = x.prefix(s + 1);
    head.set_symbol(static_cast<std::size_t>(s) + 1, 1 - head.symbol(static_cast<std::size_t>(s) + 1));
    const Point tail = shift(x, s + 1);
    Point y(concat(head, tail.preperiod()), tail.period());

    const Rational pre = metric(x, y);
    const Schedule tm = Schedule::thue_morse();
    const Rational post = metric(evaluate(tm, x, n), evaluate(tm, y, n));
    return {std::move(y), n, pre, post};
}

Report sensitivity_report(const Point& x, std::uint64_t m)
{
    const SensitivityWitness w = sensitivity_witness(x, m);
    const bool close = w.pre_distance < dyadic(m);
    const bool separated = w.post_distance >= Rational(1, 2);

    Report r;
    r.claim = "a point within the given radius separates to distance one half";
    r.parameters = {{"point", x.str()},
                    {"m", std::to_string(m)},
                    {"radius", to_fraction_string(dyadic(m))},
                    {"n", std::to_string(w.n)}};
    r.witnesses.push_back(Json{{"y", w.y.str()},
                               {"pre_distance", to_fraction_string(w.pre_distance)},
                               {"post_distance", to_fraction_string(w.post_distance)}});
    r.checked_items.push_back(
        Json{{"item", "perturbation_within_radius"}, {"holds", close}});
    r.checked_items.push_back(
        Json{{"item", "images_separated_by_one_half"}, {"holds", separated}});
    r.pass = close && separated;
    return r;
}

DenseOrbitResult dense_orbit_point(std::uint64_t resolution)
{
    if (resolution >= 58) {
        check_cap(std::numeric_limits<std::size_t>::max());
    }
    const std::uint64_t count = std::uint64_t{1} << resolution;
    check_cap(static_cast<std::size_t>(resolution * count));

    // Greedy step selection: each next step is the first whose cumulative
    // shift clears the previous block.
    std::vector<std::uint64_t> steps;
    steps.reserve(static_cast<std::size_t>(count));
    steps.push_back(0);
    for (std::uint64_t j = 1; j < count; ++j) {
        std::uint64_t candidate = steps.back();
        const std::uint64_t needed = shift_amount(steps.back()) + resolution;
        do {
            ++candidate;
        } while (shift_amount(candidate) < needed);
        steps.push_back(candidate);
    }

    const std::uint64_t total_length = shift_amount(steps.back()) + resolution;
    check_cap(static_cast<std::size_t>(total_length));
    Word bits = Word::zeros(static_cast<std::size_t>(total_length));
    for (std::uint64_t j = 0; j < count; ++j) {
        const Word w = word_from_index(j, resolution);
        const std::uint64_t offset = shift_amount(steps[static_cast<std::size_t>(j)]);
        for (std::uint64_t i = 1; i <= resolution; ++i) {
            bits.set_symbol(static_cast<std::size_t>(offset + i), w.symbol(static_cast<std::size_t>(i)));
        }
    }
    Word one_zero;
    one_zero.append(0);
    Point x(std::move(bits), one_zero);

    Report cert;
    cert.claim = "one orbit visits every cylinder of the given length";
    cert.parameters = {{"resolution", std::to_string(resolution)},
                       {"cylinders", std::to_string(count)}};
    cert.witnesses.push_back(Json{{"point", x.str()}});
    cert.pass = true;
    const Schedule tm = Schedule::thue_morse();
    for (std::uint64_t j = 0; j < count; ++j) {
        const Word w = word_from_index(j, resolution);
        const std::uint64_t step = steps[static_cast<std::size_t>(j)];
        const bool visited = point_in_cylinder(evaluate(tm, x, step), Cylinder(w));
        cert.checked_items.push_back(Json{{"word", w.str()},
                                          {"step", step},
                                          {"shift", shift_amount(step)},
                                          {"visited", visited}});
        cert.pass = cert.pass && visited;
    }
    if (resolution == 0) {
        cert.notes.push_back("resolution 0 checks only the full-space cylinder; vacuous");
    }
    return {std::move(x), std::move(cert)};
}

Report rotation_system_report(std::uint64_t horizon)
{
    const char* const samples[] = {"0/1+0*alpha", "1/2+0*alpha", "1/3+5*alpha",
                                   "1/3-7*alpha", "2/7+3*alpha"};
    Report r;
    r.claim = "sampled rotation points are invariant periodic with power orbits";
    r.parameters = {{"horizon", std::to_string(horizon)},
                    {"samples", std::to_string(std::size(samples))}};
    r.pass = true;
    std::vector<RotationPoint> points;
    for (const char* text : samples) {
        points.push_back(RotationPoint::parse(text));
    }
    for (const RotationPoint& p : points) {
        const RotationCertificate cert = invariant_periodicity_certificate(p, horizon);
        r.checked_items.push_back(Json{{"point", cert.point},
                                       {"telescoping", cert.telescoping_holds},
                                       {"range_covered", cert.range_covered},
                                       {"holds", cert.pass}});
        r.pass = r.pass && cert.pass;
    }
    bool relation_consistent = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            const bool disjoint = orbits_disjoint_exact(points[i], points[j]);
            if (i == j && disjoint) {
                relation_consistent = false;
            }
            if (disjoint != orbits_disjoint_exact(points[j], points[i])) {
                relation_consistent = false;
            }
            if (i < j) {
                r.witnesses.push_back(Json{{"x", points[i].str()},
                                           {"y", points[j].str()},
                                           {"orbits_disjoint", disjoint}});
            }
        }
    }
    r.checked_items.push_back(Json{{"item", "disjointness_reflexive_and_symmetric"},
                                   {"holds", relation_consistent}});
    r.pass = r.pass && relation_consistent;
    r.notes = {"the model covers schedule mechanics only; no continuity-type "
               "properties of the underlying system are examined"};
    return r;
}

Report banks_hypotheses_report(const BanksConfig& config)
{
    std::vector<Report> sections;
    DenseOrbitResult dense_orbit = dense_orbit_point(config.resolution);
    sections.push_back(std::move(dense_orbit.certificate));
    sections.push_back(mixing_sweep(config.resolution));
    sections.push_back(
        dense_periodic_points(config.resolution, config.block_index, config.horizon));
    sections.push_back(verify_claim3(config.fixed_point_steps));
    sections.push_back(finite_generation_report());
    sections.push_back(aperiodicity_report(config));
    sections.push_back(sensitivity_grid_report());
    return assemble_banks_report(config, std::move(sections));
}

Report assemble_banks_report(const BanksConfig& config, std::vector<Report> sections)
{
    Report top;
    top.claim = "the scheduled shift system shows transitivity evidence, dense periodic "
                "points, disjoint invariant orbits, and uniform sensitivity";
    top.parameters = {
        {"resolution", std::to_string(config.resolution)},
        {"block_index", std::to_string(config.block_index)},
        {"horizon", std::to_string(config.horizon)},
        {"fixed_point_steps", std::to_string(config.fixed_point_steps)},
        {"aperiodicity_max_period", std::to_string(config.aperiodicity_max_period)},
        {"aperiodicity_prefix_length", std::to_string(config.aperiodicity_prefix_length)}};
    top.pass = true;
    for (const Report& s : sections) {
        top.checked_items.push_back(Json{{"section", s.claim}, {"verdict", s.pass ? "pass" : "fail"}});
        top.pass = top.pass && s.pass;
    }
    top.sections = std::move(sections);
    top.notes = {"verdicts are finite-resolution evidence over cylinder bases, not proofs "
                 "about the infinite system"};
    if (config.resolution == 0) {
        top.notes.push_back("resolution 0 makes the density sections vacuous");
    }
    return top;
}

} // namespace nadslab
