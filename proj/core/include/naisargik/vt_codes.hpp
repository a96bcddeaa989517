#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "naisargik/alphabet_maps.hpp"
#include "naisargik/limits.hpp"
#include "naisargik/word.hpp"

namespace naisargik {

/// Binary VT_a(n): words with sum(i * x_i) = a mod (n + 1), positions 1-based.
struct BinaryVtParams {
    unsigned n;
    unsigned a;

    BinaryVtParams(unsigned n, unsigned a);
};

/// q-ary VT_{a,b}(n; q): signature in VT_a(n - 1) taken mod n, symbol sum = b mod q.
struct QaryVtParams {
    unsigned n;
    unsigned q;
    unsigned a;
    unsigned b;

    QaryVtParams(unsigned n, unsigned q, unsigned a, unsigned b);
};

struct QaryResidue {
    unsigned a = 0;
    unsigned b = 0;
    friend auto operator<=>(const QaryResidue&, const QaryResidue&) = default;
};

/// alpha(x): bit i is 1 iff x_i <= x_{i+1}. Length |x| - 1.
struct Signature {
    std::vector<std::uint8_t> bits;
};

unsigned binary_vt_residue(const Word& x);
Codebook binary_vt_code(const BinaryVtParams& params, const Limits& limits = {});

Signature signature(const Word& x);

/// (a, b) with a = sum(i * alpha_i) mod n and b = sum(x_i) mod q.
/// A length-1 word has an empty signature and a = 0.
QaryResidue qary_vt_residues(const Word& x);

Codebook qary_vt_code(const QaryVtParams& params, const Limits& limits = {});

/// Every nonempty residue class of Z_q^n, keyed by (a, b).
std::map<QaryResidue, Codebook> qary_vt_classes(unsigned n, unsigned q, const Limits& limits = {});

/// Class sizes for all q*n residue pairs (zero counts included).
std::map<QaryResidue, std::uint64_t> qary_census(unsigned n, unsigned q, const Limits& limits = {});

/// Signature bit of two consecutive phi8 symbols, written as a polynomial in
/// their four image bits (b1 b2 | b3 b4).
unsigned signature_bit_closed_form_phi8(unsigned b1, unsigned b2, unsigned b3, unsigned b4);

/// The same polynomial without its b2*b3 term, as it is commonly quoted.
/// Disagrees with the direct signature exactly when b2 = b3 = 1.
int signature_bit_without_cross_term(unsigned b1, unsigned b2, unsigned b3, unsigned b4);

struct ResidueDiff {
    unsigned abs_delta_a = 0;
    unsigned abs_delta_b = 0;
    friend bool operator==(const ResidueDiff&, const ResidueDiff&) = default;
};

/// Inverts both binary words through `map` and returns |a_x - a_y|, |b_x - b_y|
/// on canonical residues (no modular wraparound).
ResidueDiff image_pair_diff(const Word& X, const Word& Y, const SymbolMap& map);

/// A pair of same-class images with intersecting 1-deletion spheres.
struct ImageCollision {
    QaryResidue residue;
    Word x;  // quaternary preimages, x < y
    Word y;
    Word X;  // binary images
    Word Y;
    std::vector<Word> shared;
};

struct Conjecture1Report {
    unsigned n = 0;
    std::string map_name;
    bool holds = true;
    std::uint64_t intersecting_pairs = 0;
    std::optional<ImageCollision> counterexample;  // first pair with unequal weights
};

/// Checks that same-class images with intersecting 1-deletion spheres always
/// have equal Hamming weight, over every class of VT(n; 4).
Conjecture1Report conjecture1_scan(unsigned n, const SymbolMap& map, const Limits& limits = {});

/// All same-class image pairs with intersecting 1-deletion spheres, ordered by
/// residue then by preimage pair.
std::vector<ImageCollision> same_class_collisions(unsigned n, const SymbolMap& map,
                                                   const Limits& limits = {});

/// First entry of same_class_collisions, if any.
std::optional<ImageCollision> first_same_class_collision(unsigned n, const SymbolMap& map,
                                                   const Limits& limits = {});

}  // namespace naisargik
