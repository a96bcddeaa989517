#include "naisargik/deletion_sphere.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "naisargik/errors.hpp"

namespace naisargik {

namespace {

using WordSet = std::unordered_set<Word, WordHash>;

void check_sphere_args(const Word& x, std::size_t s, const Limits& limits) {
    if (s > x.size()) {
        throw DomainError("cannot delete " + std::to_string(s) + " symbols from a word of length " +
                          std::to_string(x.size()));
    }
    if (binomial(x.size(), s) > limits.max_sphere_subsets) {
        throw ResourceError("deletion sphere C(" + std::to_string(x.size()) + ", " +
                            std::to_string(s) + ") exceeds the guard of " +
                            std::to_string(limits.max_sphere_subsets));
    }
}

WordSet sphere_set(const Word& x, std::size_t s) {
    WordSet frontier{x};
    for (std::size_t round = 0; round < s; ++round) {
        WordSet next;
        next.reserve(frontier.size() * (x.size() - round));
        for (const Word& w : frontier) {
            for (std::size_t pos = 0; pos < w.size(); ++pos) {
                // Deleting any symbol of a run gives the same word; keep the first.
                if (pos > 0 && w[pos] == w[pos - 1]) continue;
                next.insert(w.erase(pos));
            }
        }
        frontier = std::move(next);
    }
    return frontier;
}

std::vector<Word> sorted(WordSet set) {
    std::vector<Word> out(std::make_move_iterator(set.begin()), std::make_move_iterator(set.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool Sphere::contains(const Word& w) const {
    return std::binary_search(members.begin(), members.end(), w);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    __extension__ using Wide = unsigned __int128;
    Wide result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(result);
}

std::vector<Word> single_deletions(const Word& x) {
    if (x.empty()) throw DomainError("single_deletions needs a non-empty word");
    return sorted(sphere_set(x, 1));
}

Sphere deletion_sphere(const Word& x, std::size_t s, const Limits& limits) {
    check_sphere_args(x, s, limits);
    return Sphere{x, s, sorted(sphere_set(x, s))};
}

Intersection spheres_intersect(const Word& x, const Word& y, std::size_t s, const Limits& limits) {
    if (x.size() != y.size()) {
        throw DomainError("spheres_intersect needs equal lengths, got " + std::to_string(x.size()) +
                          " and " + std::to_string(y.size()));
    }
    const Sphere dx = deletion_sphere(x, s, limits);
    const Sphere dy = deletion_sphere(y, s, limits);
    Intersection out;
    std::set_intersection(dx.members.begin(), dx.members.end(), dy.members.begin(),
                          dy.members.end(), std::back_inserter(out.shared));
    out.intersects = !out.shared.empty();
    return out;
}

CorrectionReport code_is_s_correcting(std::span<const Word> codewords, std::size_t s,
                                      const Limits& limits) {
    Codebook code(codewords.begin(), codewords.end());
    canonicalize(code);

    CorrectionReport report;
    report.s = s;
    if (code.empty()) return report;

    const std::size_t n = code.front().size();
    for (const Word& w : code) {
        if (w.size() != n) throw DomainError("codewords must share one length");
    }
    if (s > n) throw DomainError("s exceeds the codeword length");

    // member -> smallest codeword index owning it; collisions give candidate pairs.
    std::unordered_map<Word, std::size_t, WordHash> owner;
    std::optional<std::pair<std::size_t, std::size_t>> first_pair;
    for (std::size_t i = 0; i < code.size(); ++i) {
        check_sphere_args(code[i], s, limits);
        for (const Word& member : sphere_set(code[i], s)) {
            auto [it, inserted] = owner.try_emplace(member, i);
            if (inserted || it->second == i) continue;
            // Codewords are visited in order, so it->second < i.
            const std::pair<std::size_t, std::size_t> candidate{it->second, i};
            if (!first_pair || candidate < *first_pair) first_pair = candidate;
        }
    }
    if (!first_pair) return report;

    const Word& a = code[first_pair->first];
    const Word& b = code[first_pair->second];
    Intersection shared = spheres_intersect(a, b, s, limits);
    report.verdict = false;
    report.witness = CollisionWitness{a, b, shared.shared.front()};
    return report;
}

}  // namespace naisargik
