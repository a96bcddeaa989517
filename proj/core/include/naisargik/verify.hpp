#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "naisargik/alphabet_maps.hpp"
#include "naisargik/deletion_sphere.hpp"
#include "naisargik/helberg_codes.hpp"
#include "naisargik/limits.hpp"
#include "naisargik/vt_codes.hpp"
#include "naisargik/word.hpp"

namespace naisargik {

using Attributes = std::vector<std::pair<std::string, std::string>>;

/// One residue of a campaign. A failed sphere check carries its
/// CorrectionReport; campaigns without a sphere check (torsion, the bijection
/// check) put the offending words in `evidence` instead.
struct CampaignCell {
    std::string residue;
    std::uint64_t codewords = 0;
    bool verdict = true;
    std::optional<CorrectionReport> report;
    std::vector<Word> evidence;
    Attributes attributes;
};

struct CampaignResult {
    std::string name;
    Attributes grid;
    std::vector<CampaignCell> cells;  // residue order
    bool holds = true;
    std::uint64_t max_codewords = 0;
    std::vector<std::string> max_residues;
    std::vector<std::string> notes;

    const CampaignCell* find(std::string_view residue) const;
    std::vector<const CampaignCell*> failures() const;
};

Codebook image_code(std::span<const Word> quaternary, const SymbolMap& map);
Codebook image_code(const HelbergParams& params, const SymbolMap& map, const Limits& limits = {});
Codebook image_code(const QaryVtParams& params, const SymbolMap& map, const Limits& limits = {});

/// Binary codewords of even length back to quaternary words.
Codebook inverse_image_code(std::span<const Word> binary, const SymbolMap& map);
Codebook inverse_image_code(const HelbergParams& params, const SymbolMap& map,
                            const Limits& limits = {});

/// M(map(x)) mod v_{2n+1} for binary weights (q = 2) covering exactly 2n + 1 entries.
std::uint64_t image_residue(const Word& x, const SymbolMap& map, const WeightSequence& binary_weights);

/// Every nonempty class of H(n, 4, s, .) mapped to binary and checked at s + 1 deletions.
CampaignResult verify_image_correction(unsigned n, unsigned s, const SymbolMap& map,
                                       const Limits& limits = {});

/// Every nonempty class of H(N, 2, s, .) mapped to quaternary and checked at floor(s/2) deletions.
CampaignResult verify_inverse_correction(unsigned N, unsigned s, const SymbolMap& map,
                                         const Limits& limits = {});

/// For each maximum class of H(n, 4, 1, .): images share one residue a' of
/// H(2n, 2, 2, .), lie inside that class, and (reported separately) equal it.
/// a' comes from the first codeword's image.
CampaignResult verify_bijection_conjecture(unsigned n, const SymbolMap& map,
                                           const Limits& limits = {});

/// Same-class images with intersecting 1-deletion spheres have equal weight,
/// one cell per (n, map).
CampaignResult verify_weight_conjecture(unsigned n_lo, unsigned n_hi,
                                        std::span<const SymbolMap> maps, const Limits& limits = {});

struct CardinalityRow {
    unsigned n = 0;
    Rational lower;
    Rational upper;
    std::uint64_t binary_max = 0;  // max class of H(2n, 2, 2, .)
    std::uint64_t image_max = 0;   // max class of H(n, 4, 1, .)
};

/// Bounds at (n, q = 4, s = 1) next to the recomputed class maxima.
std::vector<CardinalityRow> cardinality_comparison(unsigned n_lo, unsigned n_hi,
                                                   const Limits& limits = {});

/// Reduction code of every class of H(n, q, s, .) checked at `check_deletions`
/// (0 means s + 1). Holds iff at least one residue passes and at least one fails.
CampaignResult reduction_analysis(unsigned n, unsigned q, unsigned s, unsigned check_deletions = 0,
                                  const Limits& limits = {});

/// Torsion code size per class of H(n, q, s, .). Holds iff no size exceeds 1.
CampaignResult torsion_analysis(unsigned n, unsigned q, unsigned s, const Limits& limits = {});

/// Every VT_a(n) checked at one deletion.
CampaignResult verify_binary_vt(unsigned n, const Limits& limits = {});

/// Every nonempty class of H(n, q, s, .) checked at s deletions.
CampaignResult verify_helberg_self(unsigned n, unsigned q, unsigned s, const Limits& limits = {});

}  // namespace naisargik
