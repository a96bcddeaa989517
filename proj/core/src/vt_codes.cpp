#include "naisargik/vt_codes.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_map>

#include "naisargik/deletion_sphere.hpp"
#include "naisargik/enumerate.hpp"
#include "naisargik/errors.hpp"

namespace naisargik {

namespace {

void check_bit(unsigned b) {
    if (b > 1) throw DomainError("bit value must be 0 or 1, got " + std::to_string(b));
}

unsigned binary_residue_of(std::span<const Word::Symbol> x) {
    const std::uint64_t modulus = x.size() + 1;
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += (i + 1) * x[i];
    return static_cast<unsigned>(sum % modulus);
}

QaryResidue qary_residue_of(std::span<const Word::Symbol> x, unsigned q) {
    const std::size_t n = x.size();
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (x[i] <= x[i + 1]) a += i + 1;
    }
    for (auto s : x) b += s;
    return QaryResidue{static_cast<unsigned>(n == 0 ? 0 : a % n), static_cast<unsigned>(b % q)};
}

// Same-class image pairs with intersecting 1-deletion spheres, in preimage order.
std::vector<ImageCollision> class_collisions(const QaryResidue& residue, const Codebook& preimages,
                                             const SymbolMap& map) {
    std::vector<Word> images;
    images.reserve(preimages.size());
    for (const Word& x : preimages) images.push_back(apply_map(map, x));

    std::unordered_map<Word, std::vector<std::size_t>, WordHash> owners;
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (Word& member : single_deletions(images[i])) owners[std::move(member)].push_back(i);
    }
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [member, who] : owners) {
        for (std::size_t p = 0; p < who.size(); ++p) {
            for (std::size_t r = p + 1; r < who.size(); ++r) pairs.emplace(who[p], who[r]);
        }
    }

    std::vector<ImageCollision> out;
    out.reserve(pairs.size());
    for (const auto& [i, j] : pairs) {
        Intersection shared = spheres_intersect(images[i], images[j], 1);
        out.push_back(ImageCollision{residue, preimages[i], preimages[j], images[i], images[j],
                                     std::move(shared.shared)});
    }
    return out;
}

void check_quaternary_scan(unsigned n) {
    if (n < 1) throw DomainError("length must be at least 1");
}

}  // namespace

BinaryVtParams::BinaryVtParams(unsigned n_, unsigned a_) : n(n_), a(a_) {
    if (n < 1) throw DomainError("binary VT length must be at least 1");
    if (a > n) throw DomainError("binary VT residue must lie in [0, n]");
}

QaryVtParams::QaryVtParams(unsigned n_, unsigned q_, unsigned a_, unsigned b_)
    : n(n_), q(q_), a(a_), b(b_) {
    if (n < 1) throw DomainError("q-ary VT length must be at least 1");
    if (q < 2) throw DomainError("alphabet size must be at least 2");
    if (a >= n) throw DomainError("q-ary VT residue a must lie in [0, n)");
    if (b >= q) throw DomainError("q-ary VT residue b must lie in [0, q)");
}

unsigned binary_vt_residue(const Word& x) {
    if (x.alphabet_size() != 2) throw DomainError("binary_vt_residue expects a binary word");
    if (x.empty()) throw DomainError("binary_vt_residue expects a non-empty word");
    return binary_residue_of(x.symbols());
}

Codebook binary_vt_code(const BinaryVtParams& params, const Limits& limits) {
    std::vector<Codebook> parts(chunk_count(checked_space_size(2, params.n, limits), limits));
    for_each_word_chunked(2, params.n, limits,
                          [&](std::size_t c, std::uint64_t, std::span<const Word::Symbol> d) {
                              if (binary_residue_of(d) == params.a) {
                                  parts[c].emplace_back(2, std::vector<Word::Symbol>(d.begin(), d.end()));
                              }
                          });
    Codebook out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Signature signature(const Word& x) {
    if (x.empty()) throw DomainError("signature needs a non-empty word");
    Signature sig;
    sig.bits.reserve(x.size() - 1);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) sig.bits.push_back(x[i] <= x[i + 1] ? 1 : 0);
    return sig;
}

QaryResidue qary_vt_residues(const Word& x) {
    if (x.empty()) throw DomainError("qary_vt_residues needs a non-empty word");
    return qary_residue_of(x.symbols(), x.alphabet_size());
}

std::map<QaryResidue, Codebook> qary_vt_classes(unsigned n, unsigned q, const Limits& limits) {
    if (n < 1) throw DomainError("q-ary VT length must be at least 1");
    using Buckets = std::map<QaryResidue, Codebook>;
    std::vector<Buckets> parts(chunk_count(checked_space_size(q, n, limits), limits));
    for_each_word_chunked(q, n, limits,
                          [&](std::size_t c, std::uint64_t, std::span<const Word::Symbol> d) {
                              parts[c][qary_residue_of(d, q)].emplace_back(
                                  q, std::vector<Word::Symbol>(d.begin(), d.end()));
                          });
    Buckets out;
    for (auto& part : parts) {
        for (auto& [residue, words] : part) {
            auto& dst = out[residue];
            dst.insert(dst.end(), std::make_move_iterator(words.begin()),
                       std::make_move_iterator(words.end()));
        }
    }
    return out;
}

Codebook qary_vt_code(const QaryVtParams& params, const Limits& limits) {
    const QaryResidue target{params.a, params.b};
    std::vector<Codebook> parts(chunk_count(checked_space_size(params.q, params.n, limits), limits));
    for_each_word_chunked(params.q, params.n, limits,
                          [&](std::size_t c, std::uint64_t, std::span<const Word::Symbol> d) {
                              if (qary_residue_of(d, params.q) == target) {
                                  parts[c].emplace_back(params.q,
                                                        std::vector<Word::Symbol>(d.begin(), d.end()));
                              }
                          });
    Codebook out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::map<QaryResidue, std::uint64_t> qary_census(unsigned n, unsigned q, const Limits& limits) {
    if (n < 1) throw DomainError("q-ary VT length must be at least 1");
    if (q < 2) throw DomainError("alphabet size must be at least 2");
    const std::size_t cells = std::size_t{n} * q;
    std::vector<std::vector<std::uint64_t>> parts(
        chunk_count(checked_space_size(q, n, limits), limits), std::vector<std::uint64_t>(cells, 0));
    for_each_word_chunked(q, n, limits,
                          [&](std::size_t c, std::uint64_t, std::span<const Word::Symbol> d) {
                              const QaryResidue r = qary_residue_of(d, q);
                              ++parts[c][std::size_t{r.a} * q + r.b];
                          });
    std::map<QaryResidue, std::uint64_t> out;
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < q; ++b) {
            std::uint64_t total = 0;
            for (const auto& p : parts) total += p[std::size_t{a} * q + b];
            out[{a, b}] = total;
        }
    }
    return out;
}

unsigned signature_bit_closed_form_phi8(unsigned b1, unsigned b2, unsigned b3, unsigned b4) {
    check_bit(b1);
    check_bit(b2);
    check_bit(b3);
    check_bit(b4);
    const int x1 = static_cast<int>(b1), x2 = static_cast<int>(b2);
    const int x3 = static_cast<int>(b3), x4 = static_cast<int>(b4);
    // Sum of the four disjoint patterns 00ab, 0101, a11b, 1010, expanded.
    const int value = 1 - x1 - x2 + x1 * x2 + x2 * x3 + x2 * x4 + x1 * x3 - x1 * x2 * x4 -
                      x2 * x3 * x4 - x1 * x2 * x3 - x1 * x3 * x4 + 2 * x1 * x2 * x3 * x4;
    return static_cast<unsigned>(value);
}

int signature_bit_without_cross_term(unsigned b1, unsigned b2, unsigned b3, unsigned b4) {
    check_bit(b1);
    check_bit(b2);
    check_bit(b3);
    check_bit(b4);
    const int x1 = static_cast<int>(b1), x2 = static_cast<int>(b2);
    const int x3 = static_cast<int>(b3), x4 = static_cast<int>(b4);
    return 1 - x1 - x2 + x2 * x4 + x2 * x1 + x1 * x3 - x1 * x2 * x4 - x2 * x3 * x4 -
           x1 * x2 * x3 - x1 * x3 * x4 + 2 * x1 * x2 * x3 * x4;
}

ResidueDiff image_pair_diff(const Word& X, const Word& Y, const SymbolMap& map) {
    if (X.size() != Y.size()) throw DomainError("image_pair_diff needs equal-length words");
    const Word x = invert_map(map, X);
    const Word y = invert_map(map, Y);
    if (x.empty()) throw DomainError("image_pair_diff needs non-empty words");
    const QaryResidue rx = qary_vt_residues(x);
    const QaryResidue ry = qary_vt_residues(y);
    auto absdiff = [](unsigned u, unsigned v) { return u > v ? u - v : v - u; };
    return ResidueDiff{absdiff(rx.a, ry.a), absdiff(rx.b, ry.b)};
}

Conjecture1Report conjecture1_scan(unsigned n, const SymbolMap& map, const Limits& limits) {
    check_quaternary_scan(n);
    Conjecture1Report report;
    report.n = n;
    report.map_name = map.name();
    for (const auto& [residue, words] : qary_vt_classes(n, 4, limits)) {
        for (ImageCollision& c : class_collisions(residue, words, map)) {
            ++report.intersecting_pairs;
            if (c.X.hamming_weight() != c.Y.hamming_weight() && report.holds) {
                report.holds = false;
                report.counterexample = std::move(c);
            }
        }
    }
    return report;
}

std::vector<ImageCollision> same_class_collisions(unsigned n, const SymbolMap& map,
                                                   const Limits& limits) {
    check_quaternary_scan(n);
    std::vector<ImageCollision> out;
    for (const auto& [residue, words] : qary_vt_classes(n, 4, limits)) {
        auto found = class_collisions(residue, words, map);
        out.insert(out.end(), std::make_move_iterator(found.begin()),
                   std::make_move_iterator(found.end()));
    }
    return out;
}

std::optional<ImageCollision> first_same_class_collision(unsigned n, const SymbolMap& map,
                                                   const Limits& limits) {
    check_quaternary_scan(n);
    for (const auto& [residue, words] : qary_vt_classes(n, 4, limits)) {
        auto found = class_collisions(residue, words, map);
        if (!found.empty()) return std::move(found.front());
    }
    return std::nullopt;
}

}  // namespace naisargik
