#include "naisargik/word.hpp"

#include <algorithm>

#include <boost/container_hash/hash.hpp>

#include "naisargik/errors.hpp"

namespace naisargik {

namespace {

void check_alphabet(unsigned q) {
    if (q < 2 || q > 256) {
        throw DomainError("alphabet size must be in [2, 256], got " + std::to_string(q));
    }
}

}  // namespace

Word::Word(unsigned alphabet_size, std::vector<Symbol> symbols)
    : alphabet_size_(alphabet_size), symbols_(std::move(symbols)) {
    check_alphabet(alphabet_size_);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] >= alphabet_size_) {
            throw DomainError("symbol " + std::to_string(symbols_[i]) + " at position " +
                              std::to_string(i) + " is outside Z_" +
                              std::to_string(alphabet_size_));
        }
    }
}

Word::Word(unsigned alphabet_size, std::initializer_list<unsigned> symbols)
    : alphabet_size_(alphabet_size) {
    check_alphabet(alphabet_size_);
    symbols_.reserve(symbols.size());
    for (unsigned s : symbols) {
        if (s >= alphabet_size_) {
            throw DomainError("symbol " + std::to_string(s) + " is outside Z_" +
                              std::to_string(alphabet_size_));
        }
        symbols_.push_back(static_cast<Symbol>(s));
    }
}

Word Word::zeros(unsigned alphabet_size, std::size_t length) {
    check_alphabet(alphabet_size);
    return Word(Unchecked{}, alphabet_size, std::vector<Symbol>(length, 0));
}

std::size_t Word::hamming_weight() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(symbols_.begin(), symbols_.end(), [](Symbol s) { return s != 0; }));
}

Word Word::erase(std::size_t pos) const {
    if (pos >= symbols_.size()) {
        throw DomainError("erase position " + std::to_string(pos) + " out of range");
    }
    std::vector<Symbol> out;
    out.reserve(symbols_.size() - 1);
    out.insert(out.end(), symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(pos));
    out.insert(out.end(), symbols_.begin() + static_cast<std::ptrdiff_t>(pos) + 1, symbols_.end());
    return Word(Unchecked{}, alphabet_size_, std::move(out));
}

Word Word::with_alphabet(unsigned alphabet_size) const {
    return Word(alphabet_size, symbols_);
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) noexcept {
    if (auto c = std::lexicographical_compare_three_way(lhs.symbols_.begin(), lhs.symbols_.end(),
                                                        rhs.symbols_.begin(), rhs.symbols_.end());
        c != 0) {
        return c;
    }
    return lhs.alphabet_size_ <=> rhs.alphabet_size_;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t seed = w.alphabet_size();
    boost::hash_range(seed, w.begin(), w.end());
    return seed;
}

void canonicalize(Codebook& words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

std::string to_string(const Word& w) {
    if (w.alphabet_size() > 10) {
        throw DomainError("digit-string serialization needs an alphabet of at most 10 symbols");
    }
    std::string out;
    out.reserve(w.size());
    for (auto s : w) out.push_back(static_cast<char>('0' + s));
    return out;
}

Word parse_word(std::string_view digits, unsigned alphabet_size) {
    if (alphabet_size > 10) {
        throw DomainError("digit-string parsing needs an alphabet of at most 10 symbols");
    }
    std::vector<Word::Symbol> symbols;
    symbols.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw DomainError(std::string("malformed word: unexpected character '") + c + "'");
        }
        symbols.push_back(static_cast<Word::Symbol>(c - '0'));
    }
    return Word(alphabet_size, std::move(symbols));
}

}  // namespace naisargik
