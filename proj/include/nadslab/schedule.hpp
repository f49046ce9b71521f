#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nadslab {

enum class ScheduleKind {
    thue_morse,    // step i applies f_{xi_i}, f_0 = sigma, f_1 = sigma^2
    quad_exponent, // step i applies f^{e_i}, e in blocks +n, -n, -n, +n
    explicit_list  // fixed head then repeating cycle of generator indices
};

// A driving rule: which map is applied at each step. The Thue-Morse and
// quad-exponent rules are built in; explicit lists cover hand-rolled
// schedules over a finite generator set.
class Schedule {
public:
    static Schedule thue_morse();
    static Schedule quad_exponent();

    // Index sequence head[1..] followed by cycle repeated forever; an empty
    // cycle makes the schedule finite (index_at past the head throws
    // ScheduleExhausted). generator_count is max index + 1.
    static Schedule explicit_list(std::vector<std::uint32_t> head,
                                  std::vector<std::uint32_t> cycle);

    // "tm", "quad", or "explicit:i1,i2,...(j1,j2,...)".
    static Schedule parse(std::string_view text);

    ScheduleKind kind() const { return kind_; }

    // Number of distinct generator maps the rule draws from; 0 for the
    // quad-exponent rule, which uses f^n for every n and has no finite
    // generator set.
    std::uint64_t generator_count() const;
    bool finitely_generated() const { return kind_ != ScheduleKind::quad_exponent; }

    // Generator index applied at step i >= 1. Thue-Morse: xi_i. Explicit:
    // list lookup (ScheduleExhausted past a finite list). Quad-exponent
    // steps are not indices into a finite set; use quad_exponent_at.
    std::uint32_t index_at(std::uint64_t i) const;

    const std::vector<std::uint32_t>& head() const { return head_; }
    const std::vector<std::uint32_t>& cycle() const { return cycle_; }

    std::string str() const;

    friend bool operator==(const Schedule&, const Schedule&) = default;

private:
    Schedule(ScheduleKind kind, std::vector<std::uint32_t> head,
             std::vector<std::uint32_t> cycle)
        : kind_(kind), head_(std::move(head)), cycle_(std::move(cycle))
    {
    }

    ScheduleKind kind_;
    std::vector<std::uint32_t> head_;  // explicit_list only
    std::vector<std::uint32_t> cycle_; // explicit_list only
};

// S(n) = n + (ones among xi_1..xi_n): the total symbols deleted by the
// first n Thue-Morse steps, so the composite equals sigma^{S(n)}.
// Backed by a lazily grown prefix-sum table; queries after growth are
// lock-free snapshot reads.
std::uint64_t shift_amount(std::uint64_t n);

// S(2k|A_n|) == 3k|A_n|, the identity periodic-point arguments hang on.
// Any false return is a falsification event; callers must fail loudly.
bool checkpoint_identity(unsigned n, std::uint64_t k);

// e_i: +ceil(i/4) when i = 4n-3 or 4n, -ceil(i/4) when i = 4n-2 or 4n-1.
std::int64_t quad_exponent_at(std::uint64_t i);

// E(m) = e_1 + ... + e_m, by case analysis on m mod 4. The defining
// brute-force sum lives in the tests and must agree everywhere.
std::int64_t quad_partial_sum(std::uint64_t m);

// { E(m) : 0 <= m <= M }.
std::set<std::int64_t> exponent_range(std::uint64_t M);

// Total shift of the first n steps of an explicit schedule over the shift
// generators (index j means sigma^{j+1}). Throws WrongSystem for other
// schedule kinds, ScheduleExhausted if a finite list ends before step n.
std::uint64_t explicit_shift_amount(const Schedule& s, std::uint64_t n);

std::ostream& operator<<(std::ostream& out, const Schedule& s);

} // namespace nadslab
