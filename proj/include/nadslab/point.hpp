#pragma once

#include "nadslab/rational.hpp"
#include "nadslab/word.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace nadslab {

// An eventually periodic element u v v v ... of {0,1}^N, the only points
// this library represents; exactness of every distance and orbit
// computation comes from this restriction.
//
// Construction canonicalizes: the period is primitive (not a proper power)
// and the preperiod is minimal (its last symbol, if any, differs from the
// symbol the rolled period would place there). Canonical forms are unique,
// so two Points compare equal iff they are the same sequence.
class Point {
public:
    // Throws EmptyPeriod when `period` is empty.
    Point(Word preperiod, Word period);

    static Point constant(int bit); // 0^inf or 1^inf

    // "u(v)": preperiod u, period v; parentheses mandatory, e.g. "01(10)",
    // "(0)". Parses then canonicalizes.
    static Point parse(std::string_view text);

    const Word& preperiod() const { return pre_; }
    const Word& period() const { return per_; }

    // x_i, 1-based.
    int symbol_at(std::uint64_t i) const;

    // x_1 ... x_length as a word (cap-checked).
    Word prefix(std::uint64_t length) const;

    std::string str() const; // canonical "u(v)"

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

private:
    Word pre_;
    Word per_;
};

// sigma^k: drops the first k symbols. The result is canonical.
Point shift(const Point& x, std::uint64_t k);

// d(x, y) = sum_{i >= 1} |x_i - y_i| / 2^i, evaluated in closed form:
// align both points to the shape (P, L) with P = max preperiod length and
// L = lcm of the period lengths, then
//     d = (M * (2^L - 1) + N) / (2^P * (2^L - 1))
// where M and N read the difference bits of the head and of one aligned
// period as binary numbers. Never computed by series truncation; the
// truncated series exists only as an oracle bracket.
Rational metric(const Point& x, const Point& y);

// Largest k with x_i = y_i for all i <= k; nullopt means the points are
// equal, i.e. the common prefix is infinite.
std::optional<std::uint64_t> common_prefix_length(const Point& x, const Point& y);

std::ostream& operator<<(std::ostream& out, const Point& p);

} // namespace nadslab
