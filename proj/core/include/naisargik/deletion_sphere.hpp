#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "naisargik/limits.hpp"
#include "naisargik/word.hpp"

namespace naisargik {

/// D_s(center): every distinct subsequence of length |center| - s.
/// `members` is sorted lexicographically.
struct Sphere {
    Word center;
    std::size_t deletions = 0;
    std::vector<Word> members;

    bool contains(const Word& w) const;
    std::size_t size() const noexcept { return members.size(); }
};

struct Intersection {
    bool intersects = false;
    std::vector<Word> shared;  // sorted
};

/// Two distinct codewords and one subsequence both can be reduced to.
struct CollisionWitness {
    Word first;
    Word second;
    Word shared;
};

struct CorrectionReport {
    std::size_t s = 0;
    bool verdict = true;
    std::optional<CollisionWitness> witness;  // present iff !verdict
};

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// All distinct words obtained by deleting one position. Throws on the empty word.
std::vector<Word> single_deletions(const Word& x);

/// Builds D_s(x) by s rounds of single deletions over a deduplicated frontier.
/// Throws DomainError if s > |x| and ResourceError if C(|x|, s) exceeds the guard.
Sphere deletion_sphere(const Word& x, std::size_t s, const Limits& limits = {});

/// D_s(x) ∩ D_s(y). Words must have equal length.
Intersection spheres_intersect(const Word& x, const Word& y, std::size_t s,
                               const Limits& limits = {});

/// True iff all pairs of distinct codewords have disjoint s-deletion spheres.
/// On failure the witness is the lexicographically first colliding pair
/// (codewords sorted) together with the smallest subsequence they share.
CorrectionReport code_is_s_correcting(std::span<const Word> codewords, std::size_t s,
                                      const Limits& limits = {});

}  // namespace naisargik
