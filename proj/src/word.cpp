#include "nadslab/word.hpp"

#include "nadslab/config.hpp"
#include "nadslab/errors.hpp"

#include <cassert>
#include <istream>
#include <memory>
#include <mutex>
#include <ostream>

namespace nadslab {

Word::Word(std::string_view bits)
{
    bits_.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ParseError("invalid word symbol '" + std::string(1, c) + "'");
        }
        bits_.push_back(c == '1');
    }
}

Word Word::zeros(std::size_t count)
{
    Word w;
    w.bits_.assign(count, false);
    return w;
}

Word Word::subword(std::size_t first, std::size_t count) const
{
    assert(first >= 1 && first - 1 + count <= size());
    Word out;
    out.bits_.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.bits_.push_back(bits_[first - 1 + i]);
    }
    return out;
}

std::size_t Word::count_ones() const
{
    std::size_t ones = 0;
    for (bool b : bits_) {
        ones += b ? 1 : 0;
    }
    return ones;
}

std::string Word::str() const
{
    std::string s;
    s.reserve(size());
    for (bool b : bits_) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

Word complement(const Word& w)
{
    Word out = w;
    for (std::size_t i = 1; i <= out.size(); ++i) {
        out.set_symbol(i, 1 - out.symbol(i));
    }
    return out;
}

Word concat(const Word& u, const Word& v)
{
    Word out = u;
    for (std::size_t i = 1; i <= v.size(); ++i) {
        out.append(v.symbol(i));
    }
    return out;
}

Word power(const Word& u, std::size_t m)
{
    Word out;
    for (std::size_t i = 0; i < m; ++i) {
        out = concat(out, u);
    }
    return out;
}

Word rotate_left(const Word& w, std::size_t k)
{
    if (w.empty()) {
        return w;
    }
    k %= w.size();
    if (k == 0) {
        return w;
    }
    return concat(w.subword(k + 1, w.size() - k), w.subword(1, k));
}

namespace {

// Shared prefix cache. Grown block-wise under the mutex; readers hold an
// immutable snapshot. Growth targets are powers of two (clamped to the
// cap): after appending A_0 ... A_k the prefix length is 2^k, and the next
// block A_{k+1} is the complement of everything built so far, so resuming
// is only valid from a power-of-two state.
class TmPrefixCache {
public:
    std::shared_ptr<const std::vector<bool>> at_least(std::size_t length)
    {
        check_cap(length);
        std::lock_guard lock(mutex_);
        if (!prefix_ || prefix_->size() < length) {
            std::size_t target = 1;
            while (target < length) {
                target *= 2;
            }
            target = std::min(target, materialization_cap());
            auto grown = std::make_shared<std::vector<bool>>(prefix_ ? *prefix_
                                                                     : std::vector<bool>{});
            extend(*grown, target);
            prefix_ = std::move(grown);
        }
        return prefix_;
    }

private:
    static bool is_pow2(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

    static void extend(std::vector<bool>& bits, std::size_t target)
    {
        if (!bits.empty() && !is_pow2(bits.size())) {
            bits.clear(); // cap-truncated remnant cannot be resumed
        }
        if (bits.empty() && target > 0) {
            bits.push_back(false); // A_0
        }
        while (bits.size() < target) {
            const std::size_t block = bits.size(); // |A_{k+1}| = 2^k
            const std::size_t take = std::min(block, target - bits.size());
            for (std::size_t i = 0; i < take; ++i) {
                bits.push_back(!bits[i]);
            }
        }
    }

    std::mutex mutex_;
    std::shared_ptr<const std::vector<bool>> prefix_;
};

TmPrefixCache& tm_cache()
{
    static TmPrefixCache cache;
    return cache;
}

std::uint64_t pow2_u64(unsigned e)
{
    return std::uint64_t{1} << e;
}

} // namespace

Word thue_morse_block(unsigned n)
{
    if (n == 0) {
        return Word("0");
    }
    const std::uint64_t half = pow2_u64(n - 1);
    check_cap(half);
    auto snapshot = tm_cache().at_least(half);
    Word out;
    for (std::uint64_t i = 0; i < half; ++i) {
        out.append((*snapshot)[i] ? 0 : 1);
    }
    return out;
}

Word thue_morse_prefix(std::size_t length)
{
    auto snapshot = tm_cache().at_least(length);
    Word out;
    for (std::size_t i = 0; i < length; ++i) {
        out.append((*snapshot)[i] ? 1 : 0);
    }
    return out;
}

BlockForm classify_block(unsigned n, std::uint64_t j)
{
    if (n < 1) {
        throw Error("classify_block requires n >= 1");
    }
    const std::uint64_t half = pow2_u64(n - 1); // |A_n|
    const std::uint64_t end = 2 * (j + 1) * half;
    check_cap(end);
    auto snapshot = tm_cache().at_least(end);

    const Word an = thue_morse_block(n);
    const std::uint64_t start = 2 * j * half; // 0-based offset of the block

    bool an_then_comp = true;
    bool comp_then_an = true;
    for (std::uint64_t i = 0; i < half; ++i) {
        const int left = (*snapshot)[start + i] ? 1 : 0;
        const int right = (*snapshot)[start + half + i] ? 1 : 0;
        const int a = an.symbol(i + 1);
        if (left != a || right != 1 - a) {
            an_then_comp = false;
        }
        if (left != 1 - a || right != a) {
            comp_then_an = false;
        }
        if (!an_then_comp && !comp_then_an) {
            break;
        }
    }
    if (an_then_comp) {
        return BlockForm::an_first;
    }
    if (comp_then_an) {
        return BlockForm::complement_first;
    }
    throw BlockMismatch("block n=" + std::to_string(n) + " j=" + std::to_string(j) +
                        " matches neither admissible form");
}

AperiodicityReport schedule_aperiodicity(std::uint64_t max_period, std::uint64_t prefix_length)
{
    if (prefix_length <= 2 * max_period) {
        throw Error("aperiodicity scan needs prefix_length > 2 * max_period");
    }
    auto snapshot = tm_cache().at_least(prefix_length);

    AperiodicityReport report{max_period, prefix_length, {}};
    report.witnesses.reserve(max_period);
    for (std::uint64_t p = 1; p <= max_period; ++p) {
        bool found = false;
        for (std::uint64_t i = 1; i + p <= prefix_length; ++i) {
            if ((*snapshot)[i - 1] != (*snapshot)[i - 1 + p]) {
                report.witnesses.push_back({p, i});
                found = true;
                break;
            }
        }
        if (!found) {
            throw NoWitnessFound(p);
        }
    }
    return report;
}

std::vector<Word> read_word_lines(std::istream& in)
{
    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
        words.emplace_back(line);
    }
    return words;
}

void write_word_lines(std::ostream& out, const std::vector<Word>& words)
{
    for (const Word& w : words) {
        out << w.str() << '\n';
    }
}

std::ostream& operator<<(std::ostream& out, const Word& w)
{
    return out << w.str();
}

} // namespace nadslab
