#include <doctest.h>

#include "generators.hpp"
#include "naisargik/deletion_sphere.hpp"
#include "naisargik/errors.hpp"

using namespace naisargik;

namespace {

std::vector<std::string> strings(const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(to_string(w));
    return out;
}

Word bin(const char* s) { return parse_word(s, 2); }

}  // namespace

TEST_CASE("single deletions dedup repeated symbols") {
    CHECK(strings(single_deletions(bin("00"))) == std::vector<std::string>{"0"});
    CHECK(strings(single_deletions(bin("010000"))) ==
          std::vector<std::string>{"00000", "01000", "10000"});
    CHECK(single_deletions(parse_word("0123", 4)).size() == 4);
    CHECK_THROWS_AS(single_deletions(Word(2, {})), DomainError);
}

TEST_CASE("two-deletion spheres of the textbook pair") {
    // The usual listing of D_2(000101) leaves out 0000 (delete both ones),
    // so the pair is not 2-deletion-correcting after all.
    CHECK(strings(deletion_sphere(bin("000101"), 2).members) ==
          std::vector<std::string>{"0000", "0001", "0010", "0011", "0101"});
    CHECK(strings(deletion_sphere(bin("010000"), 2).members) ==
          std::vector<std::string>{"0000", "0100", "1000"});
    const Intersection hit = spheres_intersect(bin("000101"), bin("010000"), 2);
    CHECK(hit.intersects);
    CHECK(strings(hit.shared) == std::vector<std::string>{"0000"});
    CHECK_FALSE(spheres_intersect(bin("000101"), bin("110000"), 1).intersects);
}

TEST_CASE("sphere edge cases") {
    const Word x = parse_word("2321", 4);
    const Sphere zero = deletion_sphere(x, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero.members[0] == x);
    const Sphere all = deletion_sphere(x, 4);
    REQUIRE(all.size() == 1);
    CHECK(all.members[0].empty());
    CHECK_THROWS_AS(deletion_sphere(x, 5), DomainError);
    CHECK(deletion_sphere(Word(4, {}), 0).size() == 1);
}

TEST_CASE("the sphere guard refuses oversized subset counts") {
    Limits tight;
    tight.max_sphere_subsets = 10;
    CHECK_THROWS_AS(deletion_sphere(Word::zeros(2, 12), 3, tight), ResourceError);
    CHECK_NOTHROW(deletion_sphere(Word::zeros(2, 5), 2, tight));
}

TEST_CASE("intersection of an image pair sharing a subsequence") {
    const Intersection hit = spheres_intersect(bin("10010101"), bin("10011010"), 1);
    CHECK(hit.intersects);
    CHECK(std::find(hit.shared.begin(), hit.shared.end(), bin("1001010")) != hit.shared.end());
    CHECK_THROWS_AS(spheres_intersect(bin("01"), bin("011"), 1), DomainError);
    const Intersection self = spheres_intersect(bin("0110"), bin("0110"), 1);
    CHECK(self.shared == deletion_sphere(bin("0110"), 1).members);
}

TEST_CASE("code checks and witnesses") {
    CHECK_FALSE(code_is_s_correcting(std::vector<Word>{bin("000101"), bin("010000")}, 2).verdict);
    CHECK(code_is_s_correcting(std::vector<Word>{bin("000101"), bin("010000")}, 1).verdict);
    CHECK(code_is_s_correcting(std::vector<Word>{bin("0110")}, 3).verdict);
    CHECK(code_is_s_correcting(std::vector<Word>{}, 3).verdict);
    const std::vector<Word> h{parse_word("00000", 4), parse_word("10033", 4), parse_word("23323", 4)};
    CHECK(code_is_s_correcting(h, 2).verdict);
    CHECK_FALSE(code_is_s_correcting(h, 3).verdict);  // 00 survives in both 00000 and 10033

    const auto report = code_is_s_correcting(std::vector<Word>{bin("110"), bin("011"), bin("101")}, 1);
    REQUIRE_FALSE(report.verdict);
    REQUIRE(report.witness);
    CHECK(to_string(report.witness->first) == "011");
    CHECK(to_string(report.witness->second) == "101");
    CHECK(to_string(report.witness->shared) == "01");
    CHECK_THROWS_AS(code_is_s_correcting(std::vector<Word>{bin("01"), bin("011")}, 1), DomainError);
    CHECK_THROWS_AS(code_is_s_correcting(std::vector<Word>{bin("01"), bin("10")}, 3), DomainError);
}

TEST_CASE("binomial saturates") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(200, 100) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("property: spheres match the subset oracle for n <= 10, s <= 3") {
    auto r = gen::rng(1);
    for (unsigned q = 2; q <= 4; ++q) {
        for (std::size_t n = 0; n <= 10; ++n) {
            std::vector<Word> sample;
            std::uint64_t space = 1;
            for (std::size_t i = 0; i < n; ++i) space *= q;
            if (space <= 1024) {
                sample = gen::all_words(q, n);
            } else {
                for (int k = 0; k < 150; ++k) {
                    sample.push_back(k % 2 ? gen::random_word(r, q, n) : gen::runny_word(r, q, n));
                }
            }
            for (const Word& x : sample) {
                for (std::size_t s = 0; s <= std::min<std::size_t>(3, n); ++s) {
                    const Sphere sp = deletion_sphere(x, s);
                    REQUIRE(sp.members == gen::subsequence_oracle(x, s));
                    REQUIRE(sp.size() >= 1);
                    REQUIRE(sp.size() <= binomial(n, s));
                }
            }
        }
    }
}

TEST_CASE("property: constant words collapse to one subsequence") {
    for (std::size_t n = 1; n <= 9; ++n) {
        for (std::size_t s = 0; s <= n; ++s) CHECK(deletion_sphere(Word::zeros(4, n), s).size() == 1);
    }
}

TEST_CASE("property: intersection is symmetric and witnesses are genuine") {
    auto r = gen::rng(2);
    for (int k = 0; k < 400; ++k) {
        const std::size_t n = 2 + k % 7;
        const std::size_t s = 1 + k % 2;
        const Word x = gen::runny_word(r, 2 + k % 3, n);
        const Word y = gen::runny_word(r, x.alphabet_size(), n);
        const auto a = spheres_intersect(x, y, s);
        const auto b = spheres_intersect(y, x, s);
        REQUIRE(a.intersects == b.intersects);
        REQUIRE(a.shared == b.shared);

        const std::vector<Word> code{x, y};
        const auto report = code_is_s_correcting(code, s);
        REQUIRE(report.verdict == (x == y || !a.intersects));
        if (!report.verdict) {
            REQUIRE(report.witness);
            REQUIRE(deletion_sphere(report.witness->first, s).contains(report.witness->shared));
            REQUIRE(deletion_sphere(report.witness->second, s).contains(report.witness->shared));
        }
    }
}

TEST_CASE("property: subsets of a passing code pass") {
    const std::vector<Word> h{parse_word("00000", 4), parse_word("10033", 4), parse_word("23323", 4)};
    for (std::size_t mask = 0; mask < 8; ++mask) {
        std::vector<Word> sub;
        for (std::size_t i = 0; i < 3; ++i) {
            if (mask & (1u << i)) sub.push_back(h[i]);
        }
        CHECK(code_is_s_correcting(sub, 2).verdict);
    }
}
