#pragma once

#include "nadslab/point.hpp"
#include "nadslab/word.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>

// Shared helpers for the test binaries. Everything is seeded with fixed
// constants so failures reproduce bit-for-bit.
namespace testsupport {

inline std::mt19937_64 fixed_rng(std::uint64_t salt = 0)
{
    return std::mt19937_64{0x6ad5ab5c0ffee123ULL ^ salt};
}

inline nadslab::Word random_word(std::mt19937_64& rng, std::size_t min_length,
                                 std::size_t max_length)
{
    std::uniform_int_distribution<std::size_t> length_dist(min_length, max_length);
    std::uniform_int_distribution<int> bit(0, 1);
    nadslab::Word w;
    const std::size_t length = length_dist(rng);
    for (std::size_t i = 0; i < length; ++i) {
        w.append(bit(rng));
    }
    return w;
}

inline nadslab::Point random_point(std::mt19937_64& rng, std::size_t max_preperiod = 32,
                                   std::size_t max_period = 32)
{
    nadslab::Word pre = random_word(rng, 0, max_preperiod);
    nadslab::Word per = random_word(rng, 1, max_period);
    return nadslab::Point(std::move(pre), std::move(per));
}

// Symbol i (1-based) of the stream pre per per per ..., read straight off
// the raw words with no canonicalization involved.
inline int raw_symbol(const nadslab::Word& pre, const nadslab::Word& per, std::uint64_t i)
{
    if (i <= pre.size()) {
        return pre.symbol(static_cast<std::size_t>(i));
    }
    return per.symbol(static_cast<std::size_t>((i - pre.size() - 1) % per.size()) + 1);
}

// Canonical (preperiod, period) of the stream given by raw (pre, per),
// found by brute force: the first (p, l) in lexicographic order such that
// the stream is l-periodic past position p. A candidate needs checking
// only up to p' + lcm(l, |per|) where p' = max(p, |pre|), since both the
// stream and the candidate repeat beyond that.
inline std::pair<nadslab::Word, nadslab::Word> brute_canonical(const nadslab::Word& pre,
                                                               const nadslab::Word& per)
{
    const std::uint64_t P = pre.size();
    const std::uint64_t L = per.size();
    for (std::uint64_t p = 0; p <= P; ++p) {
        for (std::uint64_t l = 1; l <= L; ++l) {
            const std::uint64_t window = std::max(p, P) + std::lcm(l, L);
            bool valid = true;
            for (std::uint64_t i = p + 1; i <= window && valid; ++i) {
                valid = raw_symbol(pre, per, i) == raw_symbol(pre, per, i + l);
            }
            if (valid) {
                nadslab::Word head;
                for (std::uint64_t i = 1; i <= p; ++i) {
                    head.append(raw_symbol(pre, per, i));
                }
                nadslab::Word cycle;
                for (std::uint64_t i = p + 1; i <= p + l; ++i) {
                    cycle.append(raw_symbol(pre, per, i));
                }
                return {head, cycle};
            }
        }
    }
    return {pre, per}; // unreachable: (P, L) itself always validates
}

} // namespace testsupport
