#include <doctest.h>

#include <unordered_set>

#include "naisargik/errors.hpp"
#include "naisargik/word.hpp"

using namespace naisargik;

TEST_CASE("word construction validates symbols against the alphabet") {
    CHECK_NOTHROW(Word(4, {0, 3, 2, 1}));
    CHECK_THROWS_AS(Word(4, {0, 4}), DomainError);
    CHECK_THROWS_AS(Word(1, {}), DomainError);
    CHECK(Word(2, {}).empty());
}

TEST_CASE("digit strings round-trip") {
    const Word w = parse_word("0321", 4);
    CHECK(w == Word(4, {0, 3, 2, 1}));
    CHECK(to_string(w) == "0321");
    CHECK(to_string(parse_word("", 2)).empty());
    CHECK_THROWS_AS(parse_word("012", 2), DomainError);
    CHECK_THROWS_AS(parse_word("0 1", 2), DomainError);
}

TEST_CASE("hamming weight counts nonzero symbols") {
    CHECK(parse_word("10110", 2).hamming_weight() == 3);
    CHECK(parse_word("0302", 4).hamming_weight() == 2);
    CHECK(Word::zeros(4, 6).hamming_weight() == 0);
}

TEST_CASE("erase removes one position") {
    const Word w = parse_word("0123", 4);
    CHECK(to_string(w.erase(0)) == "123");
    CHECK(to_string(w.erase(3)) == "012");
    CHECK_THROWS(w.erase(4));
}

TEST_CASE("ordering is lexicographic and canonicalize dedups") {
    Codebook c{parse_word("11", 2), parse_word("01", 2), parse_word("11", 2), parse_word("00", 2)};
    canonicalize(c);
    REQUIRE(c.size() == 3);
    CHECK(to_string(c[0]) == "00");
    CHECK(to_string(c[2]) == "11");
    CHECK(parse_word("01", 2) < parse_word("1", 2));
}

TEST_CASE("equal words hash equally") {
    std::unordered_set<Word, WordHash> set{parse_word("0101", 2), parse_word("0101", 2)};
    CHECK(set.size() == 1);
    CHECK(parse_word("0101", 2) != parse_word("0101", 4));
}

TEST_CASE("with_alphabet reinterprets when symbols fit") {
    CHECK(parse_word("0101", 2).with_alphabet(4).alphabet_size() == 4);
    CHECK_THROWS_AS(parse_word("0302", 4).with_alphabet(2), DomainError);
}
