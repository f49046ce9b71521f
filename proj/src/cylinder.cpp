#include "nadslab/cylinder.hpp"

#include "nadslab/errors.hpp"

#include <ostream>

namespace nadslab {

namespace {

bool is_prefix(const Word& shorter, const Word& longer)
{
    if (shorter.size() > longer.size()) {
        return false;
    }
    return shorter == longer.subword(1, shorter.size());
}

} // namespace

Cylinder Cylinder::parse(std::string_view text)
{
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw ParseError("cylinder must look like \"[w]\": " + std::string(text));
    }
    return Cylinder(Word(text.substr(1, text.size() - 2)));
}

std::string Cylinder::str() const
{
    return "[" + base_.str() + "]";
}

Cylinder cylinder_image(const Cylinder& c, std::uint64_t k)
{
    if (k >= c.base().size()) {
        return Cylinder::full_space();
    }
    const auto drop = static_cast<std::size_t>(k);
    return Cylinder(c.base().subword(drop + 1, c.base().size() - drop));
}

bool cylinders_intersect(const Cylinder& a, const Cylinder& b)
{
    return is_prefix(a.base(), b.base()) || is_prefix(b.base(), a.base());
}

bool point_in_cylinder(const Point& x, const Cylinder& c)
{
    for (std::size_t i = 1; i <= c.base().size(); ++i) {
        if (x.symbol_at(i) != c.base().symbol(i)) {
            return false;
        }
    }
    return true;
}

Point cylinder_center(const Cylinder& c)
{
    Word zero;
    zero.append(0);
    return Point(c.base(), zero);
}

std::ostream& operator<<(std::ostream& out, const Cylinder& c)
{
    return out << c.str();
}

} // namespace nadslab
