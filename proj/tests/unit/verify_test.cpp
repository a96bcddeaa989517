#include <doctest.h>

#include "generators.hpp"
#include "naisargik/errors.hpp"
#include "naisargik/verify.hpp"
#include "published_values.hpp"

using namespace naisargik;

namespace {

std::vector<std::string> strings(const Codebook& c) {
    std::vector<std::string> out;
    for (const auto& w : c) out.push_back(to_string(w));
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::string attribute(const CampaignCell& cell, const std::string& key) {
    for (const auto& [k, v] : cell.attributes) {
        if (k == key) return v;
    }
    return {};
}

const SymbolMap& phi9() { return find_map("phi9"); }

}  // namespace

TEST_CASE("image codes") {
    std::vector<std::string> expected;
    for (const auto& row : published::helberg_4_4_1_13_phi9) expected.push_back(row.binary);
    CHECK(strings(image_code(HelbergParams::make(4, 4, 1, 13), phi9())) == sorted(expected));
    CHECK(strings(image_code(HelbergParams::make(4, 4, 1, 40), phi9())) ==
          sorted({"11111101", "01110011", "10110000", "10001011", "00001000"}));
    CHECK(image_code(std::vector<Word>{}, phi9()).empty());
    CHECK(image_code(QaryVtParams(4, 4, 1, 2), find_map("phi8")).size() == 14);
    CHECK_THROWS_AS(image_code(HelbergParams::make(4, 2, 1, 0), phi9()), DomainError);
}

TEST_CASE("inverse image codes") {
    std::vector<std::string> expected;
    for (const auto& row : published::helberg_10_2_2_66_phi9_inverse) expected.push_back(row.quaternary);
    const Codebook inv = inverse_image_code(HelbergParams::make(10, 2, 2, 66), phi9());
    CHECK(strings(inv) == sorted(expected));
    CHECK(std::binary_search(inv.begin(), inv.end(), parse_word("23210", 4)));
    CHECK(inverse_image_code(std::vector<Word>{}, phi9()).empty());
    CHECK_THROWS_AS(inverse_image_code(HelbergParams::make(9, 2, 2, 0), phi9()), DomainError);
}

TEST_CASE("image residues") {
    const WeightSequence w8(2, 2, 9);
    for (const Word& x : helberg_code(HelbergParams::make(4, 4, 1, 40))) CHECK(image_residue(x, phi9(), w8) == 12);
    for (const Word& x : helberg_code(HelbergParams::make(4, 4, 1, 13))) CHECK(image_residue(x, phi9(), w8) == 33);
    const WeightSequence w10(2, 2, 11);
    for (const Word& x : helberg_code(HelbergParams::make(5, 4, 1, 134))) CHECK(image_residue(x, phi9(), w10) == 32);
    CHECK_THROWS_AS(image_residue(parse_word("0000", 4), phi9(), w10), DomainError);
    CHECK_THROWS_AS(image_residue(parse_word("0000", 4), phi9(), WeightSequence(4, 2, 9)), DomainError);
}

TEST_CASE("image correction campaigns") {
    const auto r = verify_image_correction(4, 1, phi9());
    CHECK(r.holds);
    CHECK(r.max_codewords == 5);
    CHECK(r.max_residues == std::vector<std::string>{"13", "40"});
    CHECK(r.cells.size() == 121);
    const auto r32 = verify_image_correction(3, 2, phi9());
    CHECK(r32.holds);
    CHECK(r32.max_codewords == 2);
    CHECK(r32.max_residues == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("a failing cell carries its witness") {
    // phi9 images of H(4,4,1,.) do not survive three deletions.
    CampaignResult r = verify_image_correction(4, 1, phi9());
    const auto h = helberg_code(HelbergParams::make(4, 4, 1, 13));
    const auto report = code_is_s_correcting(image_code(h, phi9()), 3);
    REQUIRE_FALSE(report.verdict);
    CHECK(report.witness);
    for (const auto* cell : r.failures()) CHECK(cell->report);
}

TEST_CASE("inverse correction campaign") {
    const auto r = verify_inverse_correction(10, 2, phi9());
    CHECK(r.holds);
    CHECK(r.max_codewords == 8);
    CHECK(r.max_residues == std::vector<std::string>{"66"});
    const auto* cell = r.find("66");
    REQUIRE(cell);
    CHECK(cell->verdict);
    CHECK_THROWS_AS(verify_inverse_correction(9, 2, phi9()), DomainError);
}

TEST_CASE("bijection conjecture") {
    const auto r4 = verify_bijection_conjecture(4, phi9());
    CHECK(r4.holds);
    REQUIRE(r4.find("40"));
    CHECK(attribute(*r4.find("40"), "image_residue") == "12");
    CHECK(attribute(*r4.find("40"), "equal") == "true");
    CHECK(attribute(*r4.find("13"), "image_residue") == "33");

    const auto r3 = verify_bijection_conjecture(3, phi9());
    CHECK(r3.max_residues == std::vector<std::string>{"0", "1", "13", "14"});
    std::vector<std::string> images;
    for (const auto& c : r3.cells) images.push_back(attribute(c, "image_residue"));
    CHECK(images == std::vector<std::string>{"13", "12", "1", "0"});
}

TEST_CASE("weight conjecture campaign") {
    std::vector<SymbolMap> maps(naisargik_registry().begin(), naisargik_registry().begin() + 8);
    const auto r = verify_weight_conjecture(1, 4, maps);
    CHECK(r.holds);
    CHECK(r.cells.size() == 32);
    CHECK_THROWS_AS(verify_weight_conjecture(3, 2, maps), DomainError);
}

TEST_CASE("cardinality comparison") {
    const auto rows = cardinality_comparison(2, 4);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].binary_max == 2);
    CHECK(rows[0].image_max == 2);
    CHECK(rows[1].binary_max == 3);
    CHECK(rows[2].binary_max == 5);
    CHECK(rows[2].image_max == 5);
    CHECK(rows[2].upper == Rational(64, 3));
    CHECK(rows[0].lower == Rational(65, 72));
}

TEST_CASE("reduction analysis shows the mixed pattern") {
    const auto r = reduction_analysis(4, 4, 1);
    CHECK(r.holds);
    const auto fails = r.failures().size();
    CHECK(fails == 69);
    CHECK(r.cells.size() - fails == 52);
    for (const auto* cell : r.failures()) CHECK(cell->report);
    for (const auto& cell : r.cells) {
        if (attribute(cell, "reduction_size") == "1") CHECK(cell.verdict);
    }
}

TEST_CASE("torsion analysis") {
    for (unsigned n = 1; n <= 5; ++n) {
        for (unsigned s = 1; s <= 2; ++s) CHECK(torsion_analysis(n, 4, s).holds);
    }
    const auto r = torsion_analysis(5, 4, 1);
    REQUIRE(r.find("0"));
    CHECK(attribute(*r.find("0"), "torsion_size") == "1");
    CHECK_THROWS_AS(torsion_analysis(3, 2, 1), DomainError);
}

TEST_CASE("self-correction campaigns") {
    CHECK(verify_binary_vt(8).holds);
    CHECK(verify_helberg_self(5, 4, 2).holds);
    CHECK(verify_helberg_self(2, 4, 3).holds);
}

TEST_CASE("campaign output does not depend on the worker count") {
    Limits many;
    many.workers = 3;
    const auto a = verify_image_correction(4, 2, phi9());
    const auto b = verify_image_correction(4, 2, phi9(), many);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        CHECK(a.cells[i].residue == b.cells[i].residue);
        CHECK(a.cells[i].verdict == b.cells[i].verdict);
        CHECK(a.cells[i].codewords == b.cells[i].codewords);
    }
    CHECK(a.max_residues == b.max_residues);
}

TEST_CASE("property: images preserve cardinality for every map") {
    auto r = gen::rng(6);
    for (const auto& m : enumerate_all_maps()) {
        for (int k = 0; k < 20; ++k) {
            Codebook c;
            const std::size_t n = 1 + k % 6;
            for (int j = 0; j < 12; ++j) c.push_back(gen::random_word(r, 4, n));
            canonicalize(c);
            const Codebook img = image_code(c, m);
            REQUIRE(img.size() == c.size());
            REQUIRE(inverse_image_code(img, m) == c);
        }
    }
}
