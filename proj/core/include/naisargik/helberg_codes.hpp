#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "naisargik/limits.hpp"
#include "naisargik/word.hpp"

namespace naisargik {

using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// v_1..v_k of the recursion v_i = 1 + (q-1) * sum_{j=1..s} v_{i-j}, v_i = 0 for i <= 0.
class WeightSequence {
public:
    WeightSequence(unsigned q, unsigned s, std::size_t count);

    unsigned q() const noexcept { return q_; }
    unsigned s() const noexcept { return s_; }
    std::size_t size() const noexcept { return values_.size(); }

    /// v_i for any integer i <= size(); zero for i <= 0.
    const Natural& operator()(long long i) const;

    const std::vector<Natural>& values() const noexcept { return values_; }

    /// v_1..v_count as uint64, or OverflowError if any entry does not fit.
    std::vector<std::uint64_t> to_u64(std::size_t count) const;

private:
    unsigned q_;
    unsigned s_;
    std::vector<Natural> values_;
};

/// v_1 .. v_{n+1}; the last entry is the modulus of length-n codes.
WeightSequence weight_sequence(unsigned n, unsigned q, unsigned s);

/// H(n, q, s, a). Residue is checked against m = v_{n+1}.
class HelbergParams {
public:
    static HelbergParams make(unsigned n, unsigned q, unsigned s, std::uint64_t a);

    unsigned n() const noexcept { return n_; }
    unsigned q() const noexcept { return q_; }
    unsigned s() const noexcept { return s_; }
    std::uint64_t a() const noexcept { return a_; }
    const WeightSequence& weights() const noexcept { return weights_; }
    const Natural& modulus() const noexcept { return modulus_; }

private:
    HelbergParams(unsigned n, unsigned q, unsigned s, std::uint64_t a, WeightSequence weights);

    unsigned n_;
    unsigned q_;
    unsigned s_;
    std::uint64_t a_;
    WeightSequence weights_;
    Natural modulus_;
};

/// m as written in the code definition: (q-1) * sum_{i=0}^{s-1} v_{n-i} + 1.
Natural modulus_from_definition(unsigned n, const WeightSequence& weights);

/// M(x) = sum v_i x_i. The weights must cover |x| entries.
Natural moment(const Word& x, const WeightSequence& weights);

Codebook helberg_code(const HelbergParams& params, const Limits& limits = {});

/// Every nonempty residue class of Z_q^n under the Helberg moment.
std::map<std::uint64_t, Codebook> helberg_classes(unsigned n, unsigned q, unsigned s,
                                                  const Limits& limits = {});

struct CodebookCensus {
    unsigned n = 0;
    unsigned q = 0;
    unsigned s = 0;
    std::uint64_t modulus = 0;
    std::map<std::uint64_t, std::uint64_t> counts;  // residue -> size, zero classes omitted

    std::uint64_t total() const;
    std::uint64_t count(std::uint64_t residue) const;
    std::uint64_t max_count() const;
    std::vector<std::uint64_t> residues_with(std::uint64_t size) const;
    /// count -> residues having it, ascending.
    std::map<std::uint64_t, std::vector<std::uint64_t>> grouped() const;
};

CodebookCensus helberg_census(unsigned n, unsigned q, unsigned s, const Limits& limits = {});

/// C_i = ((i+1) mod 2 + 1) * v_{ceil(i/2)}: 2 v_{i/2} for even i, v_{(i+1)/2} for odd i.
Natural coefficient_C(std::size_t i, const WeightSequence& weights);

struct InequalityViolation {
    std::string family;  // "increasing", "window", "odd_window"
    std::string detail;
};

/// Coefficient inequalities used by the image-code proofs:
///   increasing: C_i > C_j for all 1 <= j < i <= 2n
///   window: C_L - sum_{i=L-s}^{L-1} C_i >= 1 for 1 <= L <= 2n
///   odd_window: v_{2L-1} - sum_{i=L-floor(s/2)+1}^{L-1} (v_{2i-1} + v_{2i}) >= 1 for 1 <= L <= n
/// Terms with index <= 0 contribute 0.
struct CoefficientReport {
    unsigned n = 0;
    unsigned q = 0;
    unsigned s = 0;
    bool increasing = true;
    bool window = true;
    bool odd_window = true;
    std::uint64_t increasing_checked = 0;
    std::uint64_t window_checked = 0;
    std::uint64_t odd_window_checked = 0;
    std::vector<InequalityViolation> violations;  // first few per family

    bool all_hold() const noexcept { return increasing && window && odd_window; }
};

CoefficientReport check_coefficient_inequalities(unsigned n, unsigned q, unsigned s);

/// ((s!)^2 q^{n+s} + s) / ((q-1)^{2s} 2^n 2^s), evaluated exactly.
Rational lower_bound(unsigned n, unsigned q, unsigned s);

/// s! q^n / ((q-1)^s n^s), evaluated exactly.
Rational upper_bound(unsigned n, unsigned q, unsigned s);

/// Componentwise mod-2 images of a quaternary code, deduplicated.
Codebook reduction_code(std::span<const Word> code);

/// Binary y with 2y (componentwise) in the quaternary code.
Codebook torsion_code(std::span<const Word> code);

}  // namespace naisargik
