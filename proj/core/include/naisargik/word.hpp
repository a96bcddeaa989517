#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace naisargik {

/// A finite word over Z_q. Immutable once built; every symbol is checked
/// against the alphabet at construction.
class Word {
public:
    using Symbol = std::uint8_t;

    Word() = default;
    Word(unsigned alphabet_size, std::vector<Symbol> symbols);
    Word(unsigned alphabet_size, std::initializer_list<unsigned> symbols);

    static Word zeros(unsigned alphabet_size, std::size_t length);

    unsigned alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.cbegin(); }
    auto end() const noexcept { return symbols_.cend(); }

    /// Number of nonzero symbols.
    std::size_t hamming_weight() const noexcept;

    /// The word with position `pos` (0-based) removed.
    Word erase(std::size_t pos) const;

    /// Same symbols reinterpreted over another alphabet; throws if a symbol does not fit.
    Word with_alphabet(unsigned alphabet_size) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) noexcept;

private:
    struct Unchecked {};
    Word(Unchecked, unsigned alphabet_size, std::vector<Symbol> symbols) noexcept
        : alphabet_size_(alphabet_size), symbols_(std::move(symbols)) {}

    unsigned alphabet_size_ = 2;
    std::vector<Symbol> symbols_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

/// Sorted, duplicate-free list of words. Every function returning a codebook
/// keeps this invariant.
using Codebook = std::vector<Word>;

/// Sorts and removes duplicates in place.
void canonicalize(Codebook& words);

/// Digit-string serialization ("0321"); valid for alphabets up to 10.
std::string to_string(const Word& w);

/// Parses a digit string over Z_q. Whitespace is not accepted.
Word parse_word(std::string_view digits, unsigned alphabet_size);

}  // namespace naisargik
