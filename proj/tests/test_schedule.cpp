#include "nadslab/errors.hpp"
#include "nadslab/oracle.hpp"
#include "nadslab/schedule.hpp"
#include "nadslab/word.hpp"

#include <doctest.h>

#include <cstdint>
#include <set>

using namespace nadslab;

TEST_SUITE("schedule")
{
    TEST_CASE("composite shift amounts: frozen values")
    {
        CHECK(shift_amount(0) == 0);
        const std::uint64_t expected[] = {1, 3, 5, 6, 8, 9, 10, 12};
        for (std::uint64_t n = 1; n <= 8; ++n) {
            CHECK(shift_amount(n) == expected[n - 1]);
        }
        CHECK(shift_amount(320) == 480);
    }

    TEST_CASE("shift amounts grow by 1 or 2 and stay within [n, 2n]")
    {
        std::uint64_t previous = 0;
        for (std::uint64_t n = 1; n <= 1000000; ++n) {
            const std::uint64_t s = shift_amount(n);
            const std::uint64_t step = s - previous;
            CHECK(step >= 1);
            CHECK(step <= 2);
            CHECK(s >= n);
            CHECK(s <= 2 * n);
            previous = s;
        }
    }

    TEST_CASE("even prefixes are balanced: S(2m) = 3m")
    {
        for (std::uint64_t m = 1; m <= 100000; ++m) {
            CHECK(shift_amount(2 * m) == 3 * m);
        }
    }

    TEST_CASE("checkpoint identity over the acceptance grid")
    {
        for (unsigned n = 1; n <= 10; ++n) {
            for (std::uint64_t k = 1; k <= 100; ++k) {
                CHECK(checkpoint_identity(n, k));
            }
        }
        CHECK_THROWS_AS(checkpoint_identity(0, 1), Error);
    }

    TEST_CASE("step increments match the sequence and the parity oracle")
    {
        Schedule tm = Schedule::thue_morse();
        Word prefix = thue_morse_prefix(4096);
        for (std::uint64_t i = 1; i <= 4096; ++i) {
            CHECK(tm.index_at(i) == static_cast<std::uint32_t>(prefix.symbol(i)));
            CHECK(tm.index_at(i) == static_cast<std::uint32_t>(oracle::tm_parity(i)));
            CHECK(shift_amount(i) - shift_amount(i - 1) == std::uint64_t{1} + tm.index_at(i));
        }
    }

    TEST_CASE("alternating exponents: frozen values")
    {
        const std::int64_t expected[] = {1, -1, -1, 1, 2, -2, -2, 2, 3, -3, -3, 3};
        for (std::uint64_t i = 1; i <= 12; ++i) {
            CHECK(quad_exponent_at(i) == expected[i - 1]);
        }
        for (std::uint64_t i = 1; i <= 1000; ++i) {
            const std::int64_t magnitude = static_cast<std::int64_t>((i + 3) / 4);
            const std::int64_t e = quad_exponent_at(i);
            CHECK((e == magnitude || e == -magnitude));
        }
        CHECK_THROWS_AS(quad_exponent_at(0), Error);
    }

    TEST_CASE("exponent partial sums: frozen values and closed form")
    {
        CHECK(quad_partial_sum(0) == 0);
        CHECK(quad_partial_sum(1) == 1);
        CHECK(quad_partial_sum(5) == 2);
        CHECK(quad_partial_sum(7) == -2);
        CHECK(quad_partial_sum(9) == 3);
        CHECK(quad_partial_sum(10) == 0);
        CHECK(quad_partial_sum(11) == -3);
        CHECK(quad_partial_sum(12) == 0);

        std::int64_t running = 0;
        for (std::uint64_t m = 1; m <= 10000; ++m) {
            running += quad_exponent_at(m);
            CHECK(quad_partial_sum(m) == running);
        }
    }

    TEST_CASE("every even partial sum vanishes")
    {
        for (std::uint64_t m = 0; m <= 100000; ++m) {
            CHECK(quad_partial_sum(2 * m) == 0);
        }
    }

    TEST_CASE("odd partial sums alternate through every integer")
    {
        for (std::uint64_t n = 1; n <= 10000; ++n) {
            CHECK(quad_partial_sum(4 * n - 3) == static_cast<std::int64_t>(n));
            CHECK(quad_partial_sum(4 * n - 1) == -static_cast<std::int64_t>(n));
        }
    }

    TEST_CASE("exponent ranges: frozen values and symmetric coverage")
    {
        CHECK(exponent_range(0) == std::set<std::int64_t>{0});
        CHECK(exponent_range(2) == std::set<std::int64_t>{0, 1});
        CHECK(exponent_range(10) == std::set<std::int64_t>{-2, -1, 0, 1, 2, 3});
        CHECK(exponent_range(12) == std::set<std::int64_t>{-3, -2, -1, 0, 1, 2, 3});
        for (std::uint64_t K = 1; K <= 100; ++K) {
            std::set<std::int64_t> range = exponent_range(4 * K);
            for (std::int64_t v = -static_cast<std::int64_t>(K);
                 v <= static_cast<std::int64_t>(K); ++v) {
                CHECK(range.count(v) == 1);
            }
        }
    }

    TEST_CASE("parse and str round-trip")
    {
        for (const char* text : {"tm", "quad", "explicit:0,1,1(0,1)", "explicit:(1)",
                                 "explicit:0,0()"}) {
            CHECK(Schedule::parse(text).str() == text);
        }
        CHECK(Schedule::parse("tm").kind() == ScheduleKind::thue_morse);
        CHECK(Schedule::parse("quad").kind() == ScheduleKind::quad_exponent);
        CHECK(Schedule::parse("explicit:(1)").kind() == ScheduleKind::explicit_list);
    }

    TEST_CASE("parse rejects malformed schedules")
    {
        for (const char* text : {"", "bogus", "TM", "explicit:", "explicit:1,2",
                                 "explicit:x(1)", "explicit:,(1)", "explicit:1(",
                                 "explicit:1(2,)"}) {
            CHECK_THROWS_AS(Schedule::parse(text), ParseError);
        }
    }

    TEST_CASE("generator counts")
    {
        CHECK(Schedule::thue_morse().generator_count() == 2);
        CHECK(Schedule::thue_morse().finitely_generated());
        CHECK(Schedule::quad_exponent().generator_count() == 0);
        CHECK(!Schedule::quad_exponent().finitely_generated());
        CHECK(Schedule::parse("explicit:0,1,1(0,1)").generator_count() == 2);
        CHECK(Schedule::parse("explicit:(5)").generator_count() == 6);
        CHECK(Schedule::parse("explicit:0,0()").generator_count() == 1);
        CHECK(Schedule::parse("explicit:0,0()").finitely_generated());
    }

    TEST_CASE("explicit schedules: lookup, exhaustion, shift totals")
    {
        Schedule s = Schedule::parse("explicit:0,1,1(0,1)");
        const std::uint32_t expected[] = {0, 1, 1, 0, 1, 0, 1, 0};
        for (std::uint64_t i = 1; i <= 8; ++i) {
            CHECK(s.index_at(i) == expected[i - 1]);
        }

        Schedule finite = Schedule::parse("explicit:0,1()");
        CHECK(finite.index_at(2) == 1);
        CHECK_THROWS_AS(finite.index_at(3), ScheduleExhausted);
        CHECK(explicit_shift_amount(finite, 2) == 3);
        CHECK_THROWS_AS(explicit_shift_amount(finite, 3), ScheduleExhausted);
        CHECK(explicit_shift_amount(s, 4) == 6);
        CHECK(explicit_shift_amount(s, 0) == 0);
        CHECK_THROWS_AS(explicit_shift_amount(Schedule::thue_morse(), 1), WrongSystem);
        CHECK_THROWS_AS(Schedule::quad_exponent().index_at(1), WrongSystem);
        CHECK_THROWS_AS(s.index_at(0), Error);
    }
}
