#include "nadslab/rational.hpp"

#include "nadslab/errors.hpp"

namespace nadslab {

BigInt pow2(std::uint64_t exponent)
{
    return BigInt(1) << exponent;
}

Rational dyadic(std::uint64_t exponent)
{
    return Rational(BigInt(1), pow2(exponent));
}

std::string to_fraction_string(const Rational& value)
{
    return numerator(value).str() + "/" + denominator(value).str();
}

Rational rational_from_string(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size()) {
        throw ParseError("rational must be written p/q: '" + std::string(text) + "'");
    }
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    auto digits_only = [](std::string_view s, bool allow_sign) {
        if (s.empty()) {
            return false;
        }
        std::size_t start = 0;
        if (allow_sign && s.front() == '-') {
            start = 1;
        }
        if (start == s.size()) {
            return false;
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                return false;
            }
        }
        return true;
    };
    if (!digits_only(num, true) || !digits_only(den, false)) {
        throw ParseError("rational must be written p/q: '" + std::string(text) + "'");
    }
    const BigInt d{std::string(den)};
    if (d == 0) {
        throw ParseError("rational denominator must be nonzero");
    }
    const BigInt n{std::string(num)};
    return Rational(n, d);
}

} // namespace nadslab
