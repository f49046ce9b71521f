#pragma once

// Finite binary words and the doubling-block construction of the
// Thue-Morse sequence.
//
// Indexing convention for the whole library: symbol positions are 1-based,
// so symbol(1) is the first symbol of a word and xi_1 the first symbol of
// the Thue-Morse sequence. Storage is 0-based; the conversion happens in
// Word::symbol and nowhere else.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nadslab {

class Word {
public:
    Word() = default;
    explicit Word(std::string_view bits); // '0'/'1' only, else ParseError

    static Word zeros(std::size_t count);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    // 1-based accessors; i must be in [1, size()].
    int symbol(std::size_t i) const { return bits_[i - 1] ? 1 : 0; }
    void set_symbol(std::size_t i, int bit) { bits_[i - 1] = bit != 0; }

    void append(int bit) { bits_.push_back(bit != 0); }
    void pop_back() { bits_.pop_back(); }
    int back() const { return bits_.back() ? 1 : 0; }

    // Subword of `count` symbols starting at 1-based position `first`.
    Word subword(std::size_t first, std::size_t count) const;

    std::size_t count_ones() const;

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<bool> bits_; // packed
};

// Bitwise flip of every symbol; an involution.
Word complement(const Word& w);

Word concat(const Word& u, const Word& v);

// u repeated m times; m = 0 gives the empty word.
Word power(const Word& u, std::size_t m);

// First k symbols moved to the end (k reduced mod |w|).
Word rotate_left(const Word& w, std::size_t k);

// A_0 = "0" and A_n = complement(A_0 A_1 ... A_{n-1}); |A_n| = 2^(n-1)
// for n >= 1, so the concatenation A_0 A_1 ... A_{n-1} is exactly the
// length-2^(n-1) prefix of the sequence the blocks generate.
Word thue_morse_block(unsigned n);

// xi_1 ... xi_L where xi = A_0 A_1 A_2 ... is the Thue-Morse sequence.
// Built by appending blocks, never by bit-parity; the parity formula lives
// in the oracle module as an independent cross-check.
Word thue_morse_prefix(std::size_t length);

enum class BlockForm {
    an_first,        // A_n followed by its complement
    complement_first // complement of A_n followed by A_n
};

// Classifies the block xi_{2j|A_n|+1} ... xi_{2(j+1)|A_n|}, which is always
// one of the two forms above. Throws BlockMismatch if it is neither: that
// would falsify the balanced-block property every periodicity argument in
// this library rests on. Requires n >= 1 (for n = 0 the two forms collapse
// to single symbols and the classification is meaningless).
BlockForm classify_block(unsigned n, std::uint64_t j);

struct AperiodicityWitness {
    std::uint64_t period; // candidate period p
    std::uint64_t index;  // least i with xi_i != xi_{i+p}
};

struct AperiodicityReport {
    std::uint64_t max_period;
    std::uint64_t prefix_length;
    std::vector<AperiodicityWitness> witnesses; // one entry per p in [1, max_period]
};

// For every candidate period p <= max_period, locates the least index
// i <= prefix_length - p with xi_i != xi_{i+p}. Requires
// prefix_length > 2 * max_period. Throws NoWitnessFound(p) if some p shows
// no disagreement inside the prefix.
AperiodicityReport schedule_aperiodicity(std::uint64_t max_period, std::uint64_t prefix_length);

// Word files: one word per line, newline-terminated, no other characters.
std::vector<Word> read_word_lines(std::istream& in);
void write_word_lines(std::ostream& out, const std::vector<Word>& words);

std::ostream& operator<<(std::ostream& out, const Word& w);

} // namespace nadslab
