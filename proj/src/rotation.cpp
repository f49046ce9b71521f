#include "nadslab/rotation.hpp"

#include "nadslab/errors.hpp"
#include "nadslab/schedule.hpp"

#include <ostream>
#include <set>
#include <utility>

namespace nadslab {

namespace {

BigInt floor_of(const Rational& value)
{
    BigInt p = numerator(value);
    BigInt q = denominator(value); // q > 0 by canonical form
    if (p >= 0) {
        return p / q;
    }
    return (p - q + 1) / q;
}

} // namespace

RotationPoint::RotationPoint(Rational fractional, BigInt alpha_coefficient)
    : fractional_(std::move(fractional)), alpha_coefficient_(std::move(alpha_coefficient))
{
    fractional_ -= Rational(floor_of(fractional_));
}

RotationPoint RotationPoint::parse(std::string_view text)
{
    constexpr std::string_view suffix = "*alpha";
    if (text.size() < suffix.size() ||
        text.substr(text.size() - suffix.size()) != suffix) {
        throw ParseError("rotation point must end in \"*alpha\": " + std::string(text));
    }
    const std::string_view body = text.substr(0, text.size() - suffix.size());
    const std::size_t sign = body.find_first_of("+-");
    if (sign == std::string_view::npos || sign == 0 || sign + 1 >= body.size()) {
        throw ParseError("rotation point must look like \"a/b+c*alpha\": " +
                         std::string(text));
    }
    const Rational a = rational_from_string(body.substr(0, sign));
    if (a < 0 || a >= 1) {
        throw ParseError("rotation point fractional part must lie in [0,1): " +
                         std::string(text));
    }
    BigInt c;
    try {
        c = BigInt(std::string(body.substr(sign + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad alpha coefficient in " + std::string(text));
    }
    if (body[sign] == '-') {
        c = -c;
    }
    return RotationPoint(a, c);
}

std::string RotationPoint::str() const
{
    const BigInt& c = alpha_coefficient_;
    const std::string sign = c < 0 ? "-" : "+";
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    return to_fraction_string(fractional_) + sign + magnitude.str() + "*alpha";
}

RotationPoint apply_power(const RotationPoint& x, std::int64_t k)
{
    return RotationPoint(x.fractional(), x.alpha_coefficient() + k);
}

RotationPoint quad_evaluate(const RotationPoint& x, std::uint64_t m)
{
    return apply_power(x, quad_partial_sum(m));
}

RotationCertificate invariant_periodicity_certificate(const RotationPoint& x,
                                                      std::uint64_t horizon)
{
    RotationCertificate cert;
    cert.point = x.str();
    cert.horizon = horizon;
    cert.telescoping_holds = true;
    for (std::uint64_t k = 0; k <= horizon; ++k) {
        if (quad_evaluate(x, 2 * k) != x) {
            cert.telescoping_holds = false;
            cert.failed_steps.push_back(k);
        }
    }
    cert.range_covered = true;
    const std::set<std::int64_t> reached = exponent_range(4 * horizon);
    const auto bound = static_cast<std::int64_t>(horizon);
    for (std::int64_t j = -bound; j <= bound; ++j) {
        if (!reached.contains(j)) {
            cert.range_covered = false;
            break;
        }
    }
    cert.pass = cert.telescoping_holds && cert.range_covered;
    return cert;
}

bool replay_rotation(const RotationCertificate& cert)
{
    const RotationCertificate again =
        invariant_periodicity_certificate(RotationPoint::parse(cert.point), cert.horizon);
    return again.telescoping_holds == cert.telescoping_holds &&
           again.range_covered == cert.range_covered && again.pass == cert.pass &&
           again.failed_steps == cert.failed_steps;
}

bool orbits_disjoint_exact(const RotationPoint& x, const RotationPoint& y)
{
    return x.fractional() != y.fractional();
}

std::ostream& operator<<(std::ostream& out, const RotationPoint& p)
{
    return out << p.str();
}

} // namespace nadslab
