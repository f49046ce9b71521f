#include "nadslab/point.hpp"

#include "nadslab/config.hpp"
#include "nadslab/errors.hpp"

#include <numeric>
#include <ostream>
#include <utility>

namespace nadslab {

namespace {

// Smallest d dividing |w| with w = (w_1..w_d)^(|w|/d).
std::size_t primitive_root_length(const Word& w)
{
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) {
            continue;
        }
        if (w == power(w.subword(1, d), n / d)) {
            return d;
        }
    }
    return n;
}

} // namespace

Point::Point(Word preperiod, Word period)
    : pre_(std::move(preperiod)), per_(std::move(period))
{
    if (per_.empty()) {
        throw EmptyPeriod("point period must be nonempty");
    }
    const std::size_t d = primitive_root_length(per_);
    if (d < per_.size()) {
        per_ = per_.subword(1, d);
    }
    // Pull trailing preperiod symbols into the cycle: u b (v' b)^inf equals
    // (b v')^inf preceded by u. Rotation keeps the period primitive
    // (rotations of a primitive word are primitive), so no second reduction
    // pass is needed.
    while (!pre_.empty() && pre_.back() == per_.back()) {
        pre_.pop_back();
        per_ = rotate_left(per_, per_.size() - 1);
    }
}

Point Point::constant(int bit)
{
    Word per;
    per.append(bit);
    return Point(Word{}, per);
}

Point Point::parse(std::string_view text)
{
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')') {
        throw ParseError("point must look like \"u(v)\": " + std::string(text));
    }
    const std::string_view head = text.substr(0, open);
    const std::string_view cycle = text.substr(open + 1, text.size() - open - 2);
    if (cycle.find('(') != std::string_view::npos) {
        throw ParseError("point has nested '(': " + std::string(text));
    }
    return Point(Word(head), Word(cycle));
}

int Point::symbol_at(std::uint64_t i) const
{
    if (i == 0) {
        throw Error("symbol_at is 1-based");
    }
    if (i <= pre_.size()) {
        return pre_.symbol(static_cast<std::size_t>(i));
    }
    const std::uint64_t offset = (i - pre_.size() - 1) % per_.size();
    return per_.symbol(static_cast<std::size_t>(offset) + 1);
}

Word Point::prefix(std::uint64_t length) const
{
    check_cap(static_cast<std::size_t>(length));
    Word out;
    for (std::uint64_t i = 1; i <= length; ++i) {
        out.append(symbol_at(i));
    }
    return out;
}

std::string Point::str() const
{
    return pre_.str() + "(" + per_.str() + ")";
}

Point shift(const Point& x, std::uint64_t k)
{
    const std::uint64_t p = x.preperiod().size();
    if (k <= p) {
        return Point(x.preperiod().subword(static_cast<std::size_t>(k) + 1,
                                           static_cast<std::size_t>(p - k)),
                     x.period());
    }
    const std::uint64_t into_cycle = (k - p) % x.period().size();
    return Point(Word{}, rotate_left(x.period(), static_cast<std::size_t>(into_cycle)));
}

Rational metric(const Point& x, const Point& y)
{
    const std::uint64_t p =
        std::max<std::uint64_t>(x.preperiod().size(), y.preperiod().size());
    const std::uint64_t ell =
        std::lcm<std::uint64_t>(x.period().size(), y.period().size());

    BigInt head = 0;
    for (std::uint64_t i = 1; i <= p; ++i) {
        head <<= 1;
        if (x.symbol_at(i) != y.symbol_at(i)) {
            head |= 1;
        }
    }
    BigInt cycle = 0;
    for (std::uint64_t i = p + 1; i <= p + ell; ++i) {
        cycle <<= 1;
        if (x.symbol_at(i) != y.symbol_at(i)) {
            cycle |= 1;
        }
    }
    // The difference sequence has preperiod length p and period ell, so
    // sum_i diff_i 2^(-i) = head/2^p + cycle/(2^p (2^ell - 1)).
    const BigInt block = pow2(ell) - 1;
    return Rational(head * block + cycle, pow2(p) * block);
}

std::optional<std::uint64_t> common_prefix_length(const Point& x, const Point& y)
{
    if (x == y) {
        return std::nullopt;
    }
    const std::uint64_t p =
        std::max<std::uint64_t>(x.preperiod().size(), y.preperiod().size());
    const std::uint64_t ell =
        std::lcm<std::uint64_t>(x.period().size(), y.period().size());
    // Past position p both sequences are ell-periodic, so distinct points
    // must disagree somewhere in the first p + ell symbols.
    for (std::uint64_t i = 1; i <= p + ell; ++i) {
        if (x.symbol_at(i) != y.symbol_at(i)) {
            return i - 1;
        }
    }
    throw Error("distinct canonical points agree on a full aligned period");
}

std::ostream& operator<<(std::ostream& out, const Point& p)
{
    return out << p.str();
}

} // namespace nadslab
