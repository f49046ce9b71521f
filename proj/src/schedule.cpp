#include "nadslab/schedule.hpp"

#include "nadslab/config.hpp"
#include "nadslab/errors.hpp"
#include "nadslab/word.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <mutex>
#include <ostream>

namespace nadslab {

namespace {

// sums[i] = number of ones among xi_1..xi_i, sums[0] = 0. Grown in
// power-of-two jumps from the shared Thue-Morse prefix; readers take an
// immutable snapshot, so queries after growth never contend.
class OnesPrefixCache {
public:
    std::shared_ptr<const std::vector<std::uint64_t>> at_least(std::uint64_t n)
    {
        check_cap(static_cast<std::size_t>(n));
        std::lock_guard lock(mutex_);
        if (!sums_ || sums_->size() <= n) {
            std::size_t target = 1;
            while (target < n) {
                target *= 2;
            }
            target = std::min(target, materialization_cap());
            const Word prefix = thue_morse_prefix(target);
            auto grown = std::make_shared<std::vector<std::uint64_t>>();
            grown->reserve(target + 1);
            grown->push_back(0);
            std::uint64_t ones = 0;
            for (std::size_t i = 1; i <= target; ++i) {
                ones += static_cast<std::uint64_t>(prefix.symbol(i));
                grown->push_back(ones);
            }
            sums_ = std::move(grown);
        }
        return sums_;
    }

private:
    std::mutex mutex_;
    std::shared_ptr<const std::vector<std::uint64_t>> sums_;
};

OnesPrefixCache& ones_cache()
{
    static OnesPrefixCache cache;
    return cache;
}

std::vector<std::uint32_t> parse_index_list(std::string_view text, std::string_view whole)
{
    std::vector<std::uint32_t> indices;
    if (text.empty()) {
        return indices;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view token = text.substr(pos, comma - pos);
        std::uint32_t value = 0;
        const char* const first = token.data();
        const char* const last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || token.empty()) {
            throw ParseError("bad schedule index '" + std::string(token) + "' in " +
                             std::string(whole));
        }
        indices.push_back(value);
        pos = comma + 1;
    }
    return indices;
}

} // namespace

Schedule Schedule::thue_morse()
{
    return Schedule(ScheduleKind::thue_morse, {}, {});
}

Schedule Schedule::quad_exponent()
{
    return Schedule(ScheduleKind::quad_exponent, {}, {});
}

Schedule Schedule::explicit_list(std::vector<std::uint32_t> head,
                                 std::vector<std::uint32_t> cycle)
{
    return Schedule(ScheduleKind::explicit_list, std::move(head), std::move(cycle));
}

Schedule Schedule::parse(std::string_view text)
{
    if (text == "tm") {
        return thue_morse();
    }
    if (text == "quad") {
        return quad_exponent();
    }
    constexpr std::string_view prefix = "explicit:";
    if (text.substr(0, prefix.size()) != prefix) {
        throw ParseError("unknown schedule '" + std::string(text) + "'");
    }
    const std::string_view body = text.substr(prefix.size());
    const std::size_t open = body.find('(');
    if (open == std::string_view::npos || body.empty() || body.back() != ')') {
        throw ParseError("explicit schedule needs '(cycle)': " + std::string(text));
    }
    return explicit_list(parse_index_list(body.substr(0, open), text),
                         parse_index_list(body.substr(open + 1, body.size() - open - 2), text));
}

std::uint64_t Schedule::generator_count() const
{
    switch (kind_) {
    case ScheduleKind::thue_morse:
        return 2;
    case ScheduleKind::quad_exponent:
        return 0;
    case ScheduleKind::explicit_list: {
        std::uint32_t highest = 0;
        bool any = false;
        for (const auto& part : {head_, cycle_}) {
            for (std::uint32_t idx : part) {
                highest = std::max(highest, idx);
                any = true;
            }
        }
        return any ? std::uint64_t{highest} + 1 : 0;
    }
    }
    return 0;
}

std::uint32_t Schedule::index_at(std::uint64_t i) const
{
    if (i == 0) {
        throw Error("schedule steps are 1-based");
    }
    switch (kind_) {
    case ScheduleKind::thue_morse: {
        auto sums = ones_cache().at_least(i);
        return static_cast<std::uint32_t>((*sums)[i] - (*sums)[i - 1]);
    }
    case ScheduleKind::quad_exponent:
        throw WrongSystem("quad-exponent steps are powers, not generator indices");
    case ScheduleKind::explicit_list: {
        if (i <= head_.size()) {
            return head_[static_cast<std::size_t>(i) - 1];
        }
        if (cycle_.empty()) {
            throw ScheduleExhausted("explicit schedule has only " +
                                    std::to_string(head_.size()) + " steps, asked for " +
                                    std::to_string(i));
        }
        return cycle_[static_cast<std::size_t>((i - head_.size() - 1) % cycle_.size())];
    }
    }
    throw Error("unreachable schedule kind");
}

std::string Schedule::str() const
{
    switch (kind_) {
    case ScheduleKind::thue_morse:
        return "tm";
    case ScheduleKind::quad_exponent:
        return "quad";
    case ScheduleKind::explicit_list: {
        std::string out = "explicit:";
        for (std::size_t i = 0; i < head_.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(head_[i]);
        }
        out += '(';
        for (std::size_t i = 0; i < cycle_.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(cycle_[i]);
        }
        out += ')';
        return out;
    }
    }
    return {};
}

std::uint64_t shift_amount(std::uint64_t n)
{
    if (n == 0) {
        return 0;
    }
    auto sums = ones_cache().at_least(n);
    return n + (*sums)[n];
}

bool checkpoint_identity(unsigned n, std::uint64_t k)
{
    if (n < 1) {
        throw Error("checkpoint_identity requires n >= 1");
    }
    const std::uint64_t block = std::uint64_t{1} << (n - 1); // |A_n|
    return shift_amount(2 * k * block) == 3 * k * block;
}

std::int64_t quad_exponent_at(std::uint64_t i)
{
    if (i == 0) {
        throw Error("exponent steps are 1-based");
    }
    const auto magnitude = static_cast<std::int64_t>((i + 3) / 4);
    const std::uint64_t r = i % 4;
    return (r == 1 || r == 0) ? magnitude : -magnitude;
}

std::int64_t quad_partial_sum(std::uint64_t m)
{
    const auto q = static_cast<std::int64_t>(m / 4);
    switch (m % 4) {
    case 0:
        return 0;
    case 1:
        return q + 1;
    case 2:
        return 0;
    default:
        return -(q + 1);
    }
}

std::set<std::int64_t> exponent_range(std::uint64_t M)
{
    std::set<std::int64_t> values;
    for (std::uint64_t m = 0; m <= M; ++m) {
        values.insert(quad_partial_sum(m));
    }
    return values;
}

std::uint64_t explicit_shift_amount(const Schedule& s, std::uint64_t n)
{
    if (s.kind() != ScheduleKind::explicit_list) {
        throw WrongSystem("explicit_shift_amount needs an explicit schedule");
    }
    std::uint64_t total = 0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        total += std::uint64_t{s.index_at(i)} + 1;
    }
    return total;
}

std::ostream& operator<<(std::ostream& out, const Schedule& s)
{
    return out << s.str();
}

} // namespace nadslab
