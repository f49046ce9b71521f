#pragma once

#include "nadslab/point.hpp"
#include "nadslab/word.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nadslab {

// The set of sequences beginning with a fixed finite word. An empty base
// denotes the whole space, so image and intersection code needs no special
// cases; empty sets are not representable (every cylinder is nonempty).
class Cylinder {
public:
    Cylinder() = default; // full space
    explicit Cylinder(Word base) : base_(std::move(base)) {}

    static Cylinder full_space() { return Cylinder{}; }

    // "[w]", w over {0,1}; "[]" is the full space.
    static Cylinder parse(std::string_view text);

    const Word& base() const { return base_; }
    bool is_full_space() const { return base_.empty(); }

    std::string str() const;

    friend bool operator==(const Cylinder&, const Cylinder&) = default;
    friend auto operator<=>(const Cylinder&, const Cylinder&) = default;

private:
    Word base_;
};

// sigma^k([w]): drops the first k symbols of the base; k >= |base| gives
// the full space. Exact because sigma^k on a cylinder is onto the cylinder
// of the suffix.
Cylinder cylinder_image(const Cylinder& c, std::uint64_t k);

// Nonempty intersection criterion: one base is a prefix of the other.
bool cylinders_intersect(const Cylinder& a, const Cylinder& b);

bool point_in_cylinder(const Point& x, const Cylinder& c);

// The eventually periodic point base(c) 0^inf, used as a deterministic
// inhabitant wherever a concrete member of the cylinder is needed.
Point cylinder_center(const Cylinder& c);

std::ostream& operator<<(std::ostream& out, const Cylinder& c);

} // namespace nadslab
