#include "naisargik/alphabet_maps.hpp"

#include <algorithm>

#include "naisargik/errors.hpp"

namespace naisargik {

namespace {

constexpr BitPair pair_from_code(unsigned code) {
    return BitPair{static_cast<std::uint8_t>(code >> 1), static_cast<std::uint8_t>(code & 1u)};
}

constexpr std::array<BitPair, 4> table_of(unsigned c0, unsigned c1, unsigned c2, unsigned c3) {
    return {pair_from_code(c0), pair_from_code(c1), pair_from_code(c2), pair_from_code(c3)};
}

void check_bit(unsigned b) {
    if (b > 1) throw DomainError("bit value must be 0 or 1, got " + std::to_string(b));
}

std::vector<SymbolMap> build_registry() {
    // Codes are the image pairs read as 2-bit numbers: 00=0, 01=1, 10=2, 11=3.
    return {
        SymbolMap("phi1", table_of(0b00, 0b10, 0b11, 0b01)),
        SymbolMap("phi2", table_of(0b01, 0b00, 0b10, 0b11)),
        SymbolMap("phi3", table_of(0b01, 0b11, 0b10, 0b00)),
        SymbolMap("phi4", table_of(0b11, 0b01, 0b00, 0b10)),
        SymbolMap("phi5", table_of(0b11, 0b10, 0b00, 0b01)),
        SymbolMap("phi6", table_of(0b10, 0b00, 0b01, 0b11)),
        SymbolMap("phi7", table_of(0b10, 0b11, 0b01, 0b00)),
        SymbolMap("phi8", table_of(0b00, 0b01, 0b11, 0b10)),
        SymbolMap("phi9", table_of(0b11, 0b01, 0b10, 0b00)),
    };
}

std::vector<SymbolMap> build_all_maps() {
    const auto& registry = naisargik_registry();
    std::array<unsigned, 4> codes{0, 1, 2, 3};
    std::vector<SymbolMap> out;
    out.reserve(24);
    std::size_t k = 0;
    do {
        auto table = table_of(codes[0], codes[1], codes[2], codes[3]);
        auto named = std::find_if(registry.begin(), registry.end(),
                                  [&](const SymbolMap& m) { return m.table() == table; });
        std::string name = named != registry.end() ? named->name() : "perm-" + std::to_string(k);
        out.emplace_back(std::move(name), table);
        ++k;
    } while (std::next_permutation(codes.begin(), codes.end()));
    return out;
}

}  // namespace

SymbolMap::SymbolMap(std::string name, std::array<BitPair, 4> table)
    : name_(std::move(name)), table_(table) {
    std::array<bool, 4> seen{};
    for (unsigned symbol = 0; symbol < 4; ++symbol) {
        const BitPair p = table_[symbol];
        if (p.first > 1 || p.second > 1) {
            throw DomainError("map " + name_ + ": image bits must be 0 or 1");
        }
        if (seen[p.code()]) {
            throw DomainError("map " + name_ + " is not a bijection: repeated image pair");
        }
        seen[p.code()] = true;
        inverse_[p.code()] = static_cast<std::uint8_t>(symbol);
    }
}

BitPair SymbolMap::image(unsigned symbol) const {
    if (symbol > 3) throw DomainError("symbol " + std::to_string(symbol) + " is not in Z4");
    return table_[symbol];
}

unsigned SymbolMap::preimage(unsigned first_bit, unsigned second_bit) const {
    check_bit(first_bit);
    check_bit(second_bit);
    return inverse_[2u * first_bit + second_bit];
}

std::uint8_t SymbolMap::table_key() const noexcept {
    unsigned key = 0;
    for (const BitPair p : table_) key = (key << 2) | p.code();
    return static_cast<std::uint8_t>(key);
}

const std::vector<SymbolMap>& enumerate_all_maps() {
    static const std::vector<SymbolMap> maps = build_all_maps();
    return maps;
}

const std::vector<SymbolMap>& naisargik_registry() {
    static const std::vector<SymbolMap> registry = build_registry();
    return registry;
}

const SymbolMap& find_map(std::string_view name) {
    for (const auto& m : naisargik_registry()) {
        if (m.name() == name) return m;
    }
    for (const auto& m : enumerate_all_maps()) {
        if (m.name() == name) return m;
    }
    throw UsageError("unknown symbol map '" + std::string(name) + "'");
}

Word apply_map(const SymbolMap& map, const Word& quaternary) {
    if (quaternary.alphabet_size() != 4) {
        throw DomainError("apply_map expects a quaternary word, got alphabet size " +
                          std::to_string(quaternary.alphabet_size()));
    }
    std::vector<Word::Symbol> bits;
    bits.reserve(2 * quaternary.size());
    for (auto s : quaternary) {
        const BitPair p = map.image(s);
        bits.push_back(p.first);
        bits.push_back(p.second);
    }
    return Word(2, std::move(bits));
}

Word invert_map(const SymbolMap& map, const Word& binary) {
    if (binary.alphabet_size() != 2) {
        throw DomainError("invert_map expects a binary word, got alphabet size " +
                          std::to_string(binary.alphabet_size()));
    }
    if (binary.size() % 2 != 0) {
        throw DomainError("invert_map expects an even-length word, got length " +
                          std::to_string(binary.size()));
    }
    std::vector<Word::Symbol> symbols;
    symbols.reserve(binary.size() / 2);
    for (std::size_t i = 0; i < binary.size(); i += 2) {
        symbols.push_back(static_cast<Word::Symbol>(map.preimage(binary[i], binary[i + 1])));
    }
    return Word(4, std::move(symbols));
}

unsigned phi8_symbol_from_bits(unsigned b1, unsigned b2) {
    check_bit(b1);
    check_bit(b2);
    return 3 * b1 + b2 - 2 * b1 * b2;
}

unsigned phi9_symbol_from_bits(unsigned b1, unsigned b2) {
    check_bit(b1);
    check_bit(b2);
    return 3 - b1 - 2 * b2;
}

BitPair phi9_bits_from_symbol(unsigned symbol) {
    if (symbol > 3) throw DomainError("symbol " + std::to_string(symbol) + " is not in Z4");
    return BitPair{static_cast<std::uint8_t>((symbol + 1) % 2),
                   static_cast<std::uint8_t>(1 - symbol / 2)};
}

}  // namespace naisargik
