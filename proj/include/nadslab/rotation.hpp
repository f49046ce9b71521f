#pragma once

#include "nadslab/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nadslab {

// A circle point of the form a + b*alpha (mod 1) with a rational and alpha
// a fixed symbolic irrational. Because alpha is irrational, the pair
// (a mod 1, b) determines the point uniquely, so every question this
// module answers reduces to exact rational and integer arithmetic; alpha
// never needs a numeric value.
//
// The point models orbits of the rotation f(t) = t + alpha. It captures
// the schedule mechanics (telescoping, invariant periodic orbits, orbit
// disjointness) of an alternating-exponent system, and nothing else: in
// particular no equicontinuity or non-sensitivity statement can be read
// off this stand-in.
class RotationPoint {
public:
    // fractional is reduced mod 1 on construction.
    RotationPoint(Rational fractional, BigInt alpha_coefficient);

    static RotationPoint origin() { return RotationPoint(Rational(0), BigInt(0)); }

    // "a/b+c*alpha" or "a/b-c*alpha", e.g. "1/3+5*alpha", "0/1+0*alpha".
    static RotationPoint parse(std::string_view text);

    const Rational& fractional() const { return fractional_; }
    const BigInt& alpha_coefficient() const { return alpha_coefficient_; }

    std::string str() const;

    friend bool operator==(const RotationPoint&, const RotationPoint&) = default;

private:
    Rational fractional_;
    BigInt alpha_coefficient_;
};

// f^k for f = rotation by alpha: adds k to the alpha coefficient.
// Invertible for every k.
RotationPoint apply_power(const RotationPoint& x, std::int64_t k);

// The m-step composite of the alternating-exponent schedule, which equals
// f^{E(m)}.
RotationPoint quad_evaluate(const RotationPoint& x, std::uint64_t m);

// Finite certificate that x is an invariant periodic point of the
// alternating-exponent system: the composite returns to x at every even
// step up to 2*horizon, and the exponents reached within 4*horizon steps
// cover the full symmetric range [-horizon, horizon], so the schedule
// orbit is exactly the power orbit at that range.
struct RotationCertificate {
    std::string point;
    std::uint64_t horizon = 0;
    bool telescoping_holds = false;
    bool range_covered = false;
    bool pass = false;
    std::vector<std::uint64_t> failed_steps; // k with quad_evaluate(x, 2k) != x
};

RotationCertificate invariant_periodicity_certificate(const RotationPoint& x,
                                                      std::uint64_t horizon);

bool replay_rotation(const RotationCertificate& cert);

// Power orbits {f^k(x) : k in Z} and {f^k(y) : k in Z} intersect iff the
// fractional parts agree, since powers only move the alpha coefficient.
// Decided exactly, no horizon involved.
bool orbits_disjoint_exact(const RotationPoint& x, const RotationPoint& y);

std::ostream& operator<<(std::ostream& out, const RotationPoint& p);

} // namespace nadslab
