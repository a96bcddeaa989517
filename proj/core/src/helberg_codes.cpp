#include "naisargik/helberg_codes.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "naisargik/enumerate.hpp"
#include "naisargik/errors.hpp"

namespace naisargik {

namespace {

constexpr std::size_t kMaxViolationsPerFamily = 8;

void check_code_params(unsigned n, unsigned q, unsigned s) {
    if (n < 1) throw DomainError("Helberg length must be at least 1");
    if (q < 2) throw DomainError("alphabet size must be at least 2");
    if (s < 1) throw DomainError("Helberg deletion budget must be at least 1");
}

std::uint64_t to_u64(const Natural& value, const char* what) {
    if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
        throw OverflowError(std::string(what) + " does not fit in 64 bits");
    }
    return value.convert_to<std::uint64_t>();
}

// Weights and modulus as uint64, checked so that every moment of a q-ary word
// of length n fits without wrapping.
struct FastMoments {
    std::vector<std::uint64_t> weights;
    std::uint64_t modulus = 0;

    FastMoments(unsigned n, unsigned q, unsigned s) {
        const WeightSequence v = weight_sequence(n, q, s);
        Natural max_moment = 0;
        for (std::size_t i = 1; i <= n; ++i) max_moment += v(static_cast<long long>(i)) * (q - 1);
        to_u64(max_moment, "largest moment");
        weights = v.to_u64(n);
        modulus = to_u64(v(static_cast<long long>(n) + 1), "modulus");
    }

    std::uint64_t residue(std::span<const Word::Symbol> x) const {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < x.size(); ++i) m += weights[i] * x[i];
        return m % modulus;
    }
};

Natural factorial(unsigned k) {
    Natural f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

Natural power(Natural base, unsigned exp) {
    Natural r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace

WeightSequence::WeightSequence(unsigned q, unsigned s, std::size_t count) : q_(q), s_(s) {
    if (q < 2) throw DomainError("alphabet size must be at least 2");
    if (s < 1) throw DomainError("deletion budget must be at least 1");
    values_.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Natural sum = 0;
        for (std::size_t j = 1; j <= s && j <= i; ++j) sum += values_[i - j];
        values_.push_back(1 + Natural(q - 1) * sum);
    }
}

const Natural& WeightSequence::operator()(long long i) const {
    static const Natural zero = 0;
    if (i <= 0) return zero;
    if (static_cast<std::size_t>(i) > values_.size()) {
        throw DomainError("weight index " + std::to_string(i) + " beyond the computed " +
                          std::to_string(values_.size()) + " entries");
    }
    return values_[static_cast<std::size_t>(i) - 1];
}

std::vector<std::uint64_t> WeightSequence::to_u64(std::size_t count) const {
    if (count > values_.size()) throw DomainError("not enough weights computed");
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(naisargik::to_u64(values_[i], "weight"));
    return out;
}

WeightSequence weight_sequence(unsigned n, unsigned q, unsigned s) {
    if (n < 1) throw DomainError("length must be at least 1");
    return WeightSequence(q, s, std::size_t{n} + 1);
}

HelbergParams::HelbergParams(unsigned n, unsigned q, unsigned s, std::uint64_t a,
                             WeightSequence weights)
    : n_(n), q_(q), s_(s), a_(a), weights_(std::move(weights)),
      modulus_(weights_(static_cast<long long>(n) + 1)) {}

HelbergParams HelbergParams::make(unsigned n, unsigned q, unsigned s, std::uint64_t a) {
    check_code_params(n, q, s);
    WeightSequence w = weight_sequence(n, q, s);
    if (Natural(a) >= w(static_cast<long long>(n) + 1)) {
        throw DomainError("residue " + std::to_string(a) + " must be below the modulus " +
                          w(static_cast<long long>(n) + 1).str());
    }
    return HelbergParams(n, q, s, a, std::move(w));
}

Natural modulus_from_definition(unsigned n, const WeightSequence& weights) {
    Natural sum = 0;
    for (unsigned i = 0; i < weights.s(); ++i) {
        sum += weights(static_cast<long long>(n) - static_cast<long long>(i));
    }
    return Natural(weights.q() - 1) * sum + 1;
}

Natural moment(const Word& x, const WeightSequence& weights) {
    if (x.size() > weights.size()) {
        throw DomainError("word of length " + std::to_string(x.size()) + " needs more than the " +
                          std::to_string(weights.size()) + " available weights");
    }
    Natural m = 0;
    for (std::size_t i = 0; i < x.size(); ++i) m += weights.values()[i] * x[i];
    return m;
}

Codebook helberg_code(const HelbergParams& params, const Limits& limits) {
    const FastMoments fast(params.n(), params.q(), params.s());
    std::vector<Codebook> parts(
        chunk_count(checked_space_size(params.q(), params.n(), limits), limits));
    for_each_word_chunked(params.q(), params.n(), limits,
                          [&](std::size_t c, std::uint64_t, std::span<const Word::Symbol> d) {
                              if (fast.residue(d) == params.a()) {
                                  parts[c].emplace_back(params.q(),
                                                        std::vector<Word::Symbol>(d.begin(), d.end()));
                              }
                          });
    Codebook out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::map<std::uint64_t, Codebook> helberg_classes(unsigned n, unsigned q, unsigned s,
                                                  const Limits& limits) {
    check_code_params(n, q, s);
    const FastMoments fast(n, q, s);
    using Buckets = std::map<std::uint64_t, Codebook>;
    std::vector<Buckets> parts(chunk_count(checked_space_size(q, n, limits), limits));
    for_each_word_chunked(q, n, limits,
                          [&](std::size_t c, std::uint64_t, std::span<const Word::Symbol> d) {
                              parts[c][fast.residue(d)].emplace_back(
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

std::uint64_t CodebookCensus::total() const {
    std::uint64_t t = 0;
    for (const auto& [r, c] : counts) t += c;
    return t;
}

std::uint64_t CodebookCensus::count(std::uint64_t residue) const {
    auto it = counts.find(residue);
    return it == counts.end() ? 0 : it->second;
}

std::uint64_t CodebookCensus::max_count() const {
    std::uint64_t best = 0;
    for (const auto& [r, c] : counts) best = std::max(best, c);
    return best;
}

std::vector<std::uint64_t> CodebookCensus::residues_with(std::uint64_t size) const {
    std::vector<std::uint64_t> out;
    for (const auto& [r, c] : counts) {
        if (c == size) out.push_back(r);
    }
    return out;
}

std::map<std::uint64_t, std::vector<std::uint64_t>> CodebookCensus::grouped() const {
    std::map<std::uint64_t, std::vector<std::uint64_t>> out;
    for (const auto& [r, c] : counts) out[c].push_back(r);
    return out;
}

CodebookCensus helberg_census(unsigned n, unsigned q, unsigned s, const Limits& limits) {
    check_code_params(n, q, s);
    const FastMoments fast(n, q, s);
    using Counts = std::unordered_map<std::uint64_t, std::uint64_t>;
    std::vector<Counts> parts(chunk_count(checked_space_size(q, n, limits), limits));
    for_each_word_chunked(q, n, limits,
                          [&](std::size_t c, std::uint64_t, std::span<const Word::Symbol> d) {
                              ++parts[c][fast.residue(d)];
                          });
    CodebookCensus census{n, q, s, fast.modulus, {}};
    for (const auto& part : parts) {
        for (const auto& [r, c] : part) census.counts[r] += c;
    }
    return census;
}

Natural coefficient_C(std::size_t i, const WeightSequence& weights) {
    if (i < 1) throw DomainError("coefficient index must be at least 1");
    const std::size_t half = (i + 1) / 2;
    if (half > weights.size()) {
        throw DomainError("coefficient C_" + std::to_string(i) + " needs v_" +
                          std::to_string(half) + ", beyond the computed weights");
    }
    const Natural& v = weights(static_cast<long long>(half));
    return i % 2 == 0 ? Natural(2 * v) : v;
}

CoefficientReport check_coefficient_inequalities(unsigned n, unsigned q, unsigned s) {
    check_code_params(n, q, s);
    const std::size_t top = 2 * std::size_t{n};
    const WeightSequence v(q, s, top + 1);
    std::vector<Natural> C(top + 1, 0);  // C[0] unused, reads as 0 for index <= 0
    for (std::size_t i = 1; i <= top; ++i) C[i] = coefficient_C(i, v);
    auto c_at = [&](long long i) -> Natural { return i <= 0 ? Natural(0) : C[static_cast<std::size_t>(i)]; };

    CoefficientReport report;
    report.n = n;
    report.q = q;
    report.s = s;
    auto record = [&](bool& flag, const char* family, std::string detail) {
        flag = false;
        const auto same = std::count_if(report.violations.begin(), report.violations.end(),
                                        [&](const InequalityViolation& seen) { return seen.family == family; });
        if (static_cast<std::size_t>(same) < kMaxViolationsPerFamily) {
            report.violations.push_back({family, std::move(detail)});
        }
    };

    for (std::size_t i = 2; i <= top; ++i) {
        for (std::size_t j = 1; j < i; ++j) {
            ++report.increasing_checked;
            if (!(C[i] > C[j])) {
                record(report.increasing, "increasing",
                       "C_" + std::to_string(i) + " = " + C[i].str() + " <= C_" + std::to_string(j) +
                           " = " + C[j].str());
            }
        }
    }

    for (long long L = 1; L <= static_cast<long long>(top); ++L) {
        ++report.window_checked;
        Natural gap = c_at(L);
        for (long long i = L - static_cast<long long>(s); i <= L - 1; ++i) gap -= c_at(i);
        if (gap < 1) {
            record(report.window, "window",
                   "L = " + std::to_string(L) + ": C_L - sum = " + gap.str());
        }
    }

    const long long half_s = s / 2;
    for (long long L = 1; L <= static_cast<long long>(n); ++L) {
        ++report.odd_window_checked;
        Natural gap = v(2 * L - 1);
        for (long long i = L - half_s + 1; i <= L - 1; ++i) gap -= v(2 * i - 1) + v(2 * i);
        if (gap < 1) {
            record(report.odd_window, "odd_window",
                   "L = " + std::to_string(L) + ": v_{2L-1} - sum = " + gap.str());
        }
    }
    return report;
}

Rational lower_bound(unsigned n, unsigned q, unsigned s) {
    if (n < 1) throw DomainError("length must be at least 1");
    if (q < 2) throw DomainError("alphabet size must be at least 2");
    const Natural fs = factorial(s);
    const Natural numerator = fs * fs * power(q, n + s) + s;
    const Natural denominator = power(q - 1, 2 * s) * power(2, n) * power(2, s);
    return Rational(numerator, denominator);
}

Rational upper_bound(unsigned n, unsigned q, unsigned s) {
    if (n < 1) throw DomainError("length must be at least 1");
    if (q < 2) throw DomainError("alphabet size must be at least 2");
    const Natural numerator = factorial(s) * power(q, n);
    const Natural denominator = power(q - 1, s) * power(n, s);
    return Rational(numerator, denominator);
}

Codebook reduction_code(std::span<const Word> code) {
    Codebook out;
    out.reserve(code.size());
    for (const Word& w : code) {
        if (w.alphabet_size() != 4) throw DomainError("reduction_code expects quaternary words");
        std::vector<Word::Symbol> bits(w.begin(), w.end());
        for (auto& b : bits) b &= 1u;
        out.emplace_back(2, std::move(bits));
    }
    canonicalize(out);
    return out;
}

Codebook torsion_code(std::span<const Word> code) {
    Codebook out;
    for (const Word& w : code) {
        if (w.alphabet_size() != 4) throw DomainError("torsion_code expects quaternary words");
        if (std::any_of(w.begin(), w.end(), [](auto s) { return s % 2 != 0; })) continue;
        std::vector<Word::Symbol> bits(w.begin(), w.end());
        for (auto& b : bits) b /= 2;
        out.emplace_back(2, std::move(bits));
    }
    canonicalize(out);
    return out;
}

}  // namespace naisargik
