#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "naisargik/word.hpp"

namespace naisargik {

/// Ordered bit pair (first, second) assigned to a quaternary symbol.
struct BitPair {
    std::uint8_t first = 0;
    std::uint8_t second = 0;

    constexpr unsigned code() const noexcept { return 2u * first + second; }
    friend constexpr bool operator==(BitPair, BitPair) = default;
};

/// A bijection Z4 -> Z2^2. Construction rejects tables that repeat an image pair.
class SymbolMap {
public:
    SymbolMap(std::string name, std::array<BitPair, 4> table);

    const std::string& name() const noexcept { return name_; }
    const std::array<BitPair, 4>& table() const noexcept { return table_; }

    BitPair image(unsigned symbol) const;
    unsigned preimage(unsigned first_bit, unsigned second_bit) const;

    /// Image table packed as eight bits, symbol 0 in the high bits.
    std::uint8_t table_key() const noexcept;

    /// Same table regardless of the name.
    bool same_table(const SymbolMap& other) const noexcept { return table_ == other.table_; }

private:
    std::string name_;
    std::array<BitPair, 4> table_;
    std::array<std::uint8_t, 4> inverse_{};
};

/// All 24 bijections, ordered lexicographically by image table. Maps that
/// coincide with a registry entry carry its name ("phi1".."phi9"); the rest
/// are labelled "perm-k" with k their 0-based position in this order.
const std::vector<SymbolMap>& enumerate_all_maps();

/// The nine named maps phi1..phi9, in registry order.
const std::vector<SymbolMap>& naisargik_registry();

/// Lookup by registry name ("phi8") or canonical label ("perm-3").
/// Throws UsageError for an unknown name.
const SymbolMap& find_map(std::string_view name);

/// Quaternary word of length n -> binary word of length 2n.
Word apply_map(const SymbolMap& map, const Word& quaternary);

/// Binary word of even length 2n -> quaternary word of length n.
Word invert_map(const SymbolMap& map, const Word& binary);

// Arithmetic forms of the phi8 / phi9 tables.

/// phi8 inverse on one bit pair: 3*b1 + b2 - 2*b1*b2.
unsigned phi8_symbol_from_bits(unsigned b1, unsigned b2);

/// phi9 inverse on one bit pair: 3 - b1 - 2*b2.
unsigned phi9_symbol_from_bits(unsigned b1, unsigned b2);

/// phi9 forward on one symbol: ((x+1) mod 2, 1 - floor(x/2)).
BitPair phi9_bits_from_symbol(unsigned symbol);

}  // namespace naisargik
