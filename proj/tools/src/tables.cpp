#include <cstdio>
#include <functional>
#include <map>
#include <istream>
#include <set>
#include <sstream>

#include "command.hpp"
#include "naisargik/enumerate.hpp"
#include "naisargik/errors.hpp"
#include "naisargik/verify.hpp"

namespace naisargik::cli {

namespace {

constexpr const char* kRecomputed = "recomputed";

std::string decimal(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.convert_to<double>());
    return buf;
}

template <class Range>
std::string join_values(const Range& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ' ';
        if constexpr (std::is_convertible_v<decltype(v), std::string>) {
            out += v;
        } else {
            out += std::to_string(v);
        }
    }
    return out;
}

std::string join_words(const std::vector<Word>& words) { return join(words_to_strings(words)); }

struct Range {
    unsigned lo;
    unsigned hi;
};

Range length_range(const Config& cfg, unsigned lo, unsigned hi) {
    const unsigned top = cfg.n.value_or(hi);
    const unsigned bottom = cfg.n_min.value_or(cfg.n ? std::min(lo, top) : lo);
    if (bottom > top) throw UsageError("--n-min exceeds --n");
    return {bottom, top};
}

// codeword -> image pairs, in codeword order.
Output image_rows(const Codebook& code, const SymbolMap& map, bool inverse) {
    Output o;
    o.header = {"codeword", "image"};
    for (const auto& w : code) {
        o.rows.push_back({to_string(w), to_string(inverse ? invert_map(map, w) : apply_map(map, w))});
    }
    return o;
}

Output sphere_rows(const Codebook& centers, std::size_t deletions, const Limits& limits, bool annotate) {
    Output o;
    o.header = {"center", "deletions", "size", "members"};
    if (annotate) o.header.push_back("annotation");
    for (const auto& c : centers) {
        const Sphere sp = deletion_sphere(c, deletions, limits);
        o.rows.push_back({to_string(c), std::to_string(deletions), std::to_string(sp.size()), join_words(sp.members)});
        if (annotate) o.rows.back().push_back(kRecomputed);
    }
    return o;
}

Output qary_vt_images(const Config& cfg) {
    const QaryVtParams p(cfg.n.value_or(4), cfg.q.value_or(4), static_cast<unsigned>(cfg.a.value_or(1)),
                         cfg.b.value_or(2));
    return image_rows(qary_vt_code(p, cfg.limits()), find_map(cfg.map.value_or("phi8")), false);
}

Output helberg_images(const Config& cfg) {
    const auto p = HelbergParams::make(cfg.n.value_or(4), cfg.q.value_or(4), cfg.s.value_or(1), cfg.a.value_or(13));
    return image_rows(helberg_code(p, cfg.limits()), find_map(cfg.map.value_or("phi9")), false);
}

Output binary_helberg_preimages(const Config& cfg) {
    const auto p = HelbergParams::make(cfg.n.value_or(10), cfg.q.value_or(2), cfg.s.value_or(2), cfg.a.value_or(66));
    return image_rows(helberg_code(p, cfg.limits()), find_map(cfg.map.value_or("phi9")), true);
}

Output weight_shift_pairs(const Config& cfg, std::istream& in) {
    const SymbolMap& map = find_map(cfg.map.value_or("phi8"));
    Output o;
    o.header = {"n", "X", "Y", "abs_delta_a", "abs_delta_b", "pairs", "same_class_pairs"};
    auto row = [&](const Word& X, const Word& Y, std::uint64_t pairs, std::uint64_t same) {
        const ResidueDiff d = image_pair_diff(X, Y, map);
        o.rows.push_back({std::to_string(X.size() / 2), to_string(X), to_string(Y), std::to_string(d.abs_delta_a),
                          std::to_string(d.abs_delta_b), std::to_string(pairs), std::to_string(same)});
    };

    if (!cfg.input.empty()) {
        // Given pairs "X,Y" (or whitespace separated), one per line.
        for (std::string line : read_lines(cfg.input, in)) {
            if (line.empty()) continue;
            for (char& c : line) {
                if (c == ',') c = ' ';
            }
            std::istringstream ss(line);
            std::string x, y;
            if (!(ss >> x >> y)) throw UsageError("expected a pair of binary words: " + line);
            const Word X = parse_word(x, 2);
            const Word Y = parse_word(y, 2);
            const bool same = image_pair_diff(X, Y, map) == ResidueDiff{};
            row(X, Y, 1, same ? 1 : 0);
        }
        return o;
    }

    // Every (X, Y) with w(X) = w(Y) + 1 and a shared single deletion: Y is X
    // with one 1 deleted and one 0 inserted. First pair in order plus totals.
    const Range r = length_range(cfg, 1, 6);
    for (unsigned n = r.lo; n <= r.hi; ++n) {
        const std::uint64_t total = checked_space_size(2, 2 * n, cfg.limits());
        std::uint64_t pairs = 0;
        std::uint64_t same = 0;
        std::optional<std::pair<Word, Word>> first;
        for_each_word_in_range(2, 2 * n, 0, total, [&](std::uint64_t, std::span<const Word::Symbol> digits) {
            const Word X(2, std::vector<Word::Symbol>(digits.begin(), digits.end()));
            std::set<Word> partners;
            for (std::size_t p = 0; p < X.size(); ++p) {
                if (X[p] != 1 || (p > 0 && X[p - 1] == 1)) continue;
                const Word Z = X.erase(p);
                for (std::size_t j = 0; j <= Z.size(); ++j) {
                    if (j > 0 && Z[j - 1] == 0) continue;
                    std::vector<Word::Symbol> sym(Z.begin(), Z.end());
                    sym.insert(sym.begin() + static_cast<std::ptrdiff_t>(j), 0);
                    partners.insert(Word(2, std::move(sym)));
                }
            }
            for (const Word& Y : partners) {
                ++pairs;
                if (image_pair_diff(X, Y, map) == ResidueDiff{}) ++same;
                if (!first) first.emplace(X, Y);
            }
        });
        if (first) row(first->first, first->second, pairs, same);
    }
    o.notes.push_back("same_class_pairs counts weight-shifted pairs whose preimages share both residues");
    return o;
}

Output helberg_census_table(const Config& cfg) {
    const auto census = helberg_census(cfg.n.value_or(4), cfg.q.value_or(4), cfg.s.value_or(1), cfg.limits());
    Output o;
    o.header = {"count", "classes", "residues"};
    const auto grouped = census.grouped();
    for (auto it = grouped.rbegin(); it != grouped.rend(); ++it) {
        o.rows.push_back({std::to_string(it->first), std::to_string(it->second.size()), join_values(it->second)});
    }
    o.notes.push_back("modulus " + std::to_string(census.modulus) + ", empty classes omitted");
    return o;
}

Output max_residue_mapping(const Config& cfg) {
    const SymbolMap& map = find_map(cfg.map.value_or("phi9"));
    const Range r = length_range(cfg, 3, 7);
    Output o;
    o.header = {"n", "residue", "codewords", "image_residue", "subset", "equal"};
    for (unsigned n = r.lo; n <= r.hi; ++n) {
        const CampaignResult res = verify_bijection_conjecture(n, map, cfg.limits());
        for (const auto& cell : res.cells) {
            auto attr = [&](const std::string& key) {
                for (const auto& [k, v] : cell.attributes) {
                    if (k == key) return v;
                }
                return std::string{};
            };
            o.rows.push_back({std::to_string(n), cell.residue, std::to_string(cell.codewords), attr("image_residue"),
                              attr("subset"), attr("equal")});
        }
    }
    return o;
}

Output cardinality_table(const Config& cfg) {
    const Range r = length_range(cfg, 2, 6);
    Output o;
    o.header = {"n", "lower", "upper", "lower_decimal", "upper_decimal", "binary_max", "image_max", "annotation"};
    for (const auto& row : cardinality_comparison(r.lo, r.hi, cfg.limits())) {
        o.rows.push_back({std::to_string(row.n), row.lower.str(), row.upper.str(), decimal(row.lower),
                          decimal(row.upper), std::to_string(row.binary_max), std::to_string(row.image_max),
                          kRecomputed});
    }
    o.notes.push_back("bounds evaluated at q=4 s=1 from the closed-form expressions");
    return o;
}

Output image_max_classes(const Config& cfg) {
    const SymbolMap& map = find_map(cfg.map.value_or("phi9"));
    const Range r = length_range(cfg, 3, 6);
    Output o;
    o.header = {"n", "s", "max_codewords", "residues", "all_pass"};
    for (unsigned n = r.lo; n <= r.hi; ++n) {
        const unsigned s_lo = cfg.s.value_or(1);
        const unsigned s_hi = cfg.s.value_or(n > 1 ? n - 1 : 1);
        for (unsigned s = s_lo; s <= s_hi; ++s) {
            const CampaignResult res = verify_image_correction(n, s, map, cfg.limits());
            o.rows.push_back({std::to_string(n), std::to_string(s), std::to_string(res.max_codewords),
                              join_values(res.max_residues), res.holds ? "true" : "false"});
        }
    }
    return o;
}

// A quaternary class, its images, and the binary class the first image lands in.
Output aligned_classes(const Config& cfg, unsigned n_default, std::uint64_t a_default) {
    const SymbolMap& map = find_map(cfg.map.value_or("phi9"));
    const unsigned n = cfg.n.value_or(n_default);
    const auto p = HelbergParams::make(n, 4, 1, cfg.a.value_or(a_default));
    const Codebook code = helberg_code(p, cfg.limits());
    Output o;
    o.header = {"codeword", "image", "binary_codeword", "binary_residue"};
    if (code.empty()) return o;
    const WeightSequence binary_weights(2, 2, 2 * n + 1);
    const std::uint64_t target = image_residue(code.front(), map, binary_weights);
    const Codebook binary = helberg_code(HelbergParams::make(2 * n, 2, 2, target), cfg.limits());
    const std::set<Word> binary_set(binary.begin(), binary.end());
    std::set<Word> images;
    for (const auto& w : code) {
        const Word img = apply_map(map, w);
        images.insert(img);
        o.rows.push_back({to_string(w), to_string(img), binary_set.count(img) ? to_string(img) : "",
                          std::to_string(target)});
    }
    for (const auto& b : binary) {
        if (!images.count(b)) o.rows.push_back({"", "", to_string(b), std::to_string(target)});
    }
    return o;
}

Output vt_census_table(const Config& cfg) {
    const auto census = qary_census(cfg.n.value_or(4), cfg.q.value_or(4), cfg.limits());
    std::map<std::uint64_t, std::vector<std::string>> grouped;
    for (const auto& [res, count] : census) {
        grouped[count].push_back("(" + std::to_string(res.a) + "," + std::to_string(res.b) + ")");
    }
    Output o;
    o.header = {"count", "classes", "residues"};
    for (auto it = grouped.rbegin(); it != grouped.rend(); ++it) {
        o.rows.push_back({std::to_string(it->first), std::to_string(it->second.size()), join_values(it->second)});
    }
    return o;
}

Output bounds_table(const Config& cfg) {
    const Range r = length_range(cfg, 2, 6);
    const unsigned q = cfg.q.value_or(4);
    const unsigned s = cfg.s.value_or(1);
    Output o;
    o.header = {"n", "q", "s", "lower", "upper", "lower_decimal", "upper_decimal"};
    for (unsigned n = r.lo; n <= r.hi; ++n) {
        const Rational lo = lower_bound(n, q, s);
        const Rational up = upper_bound(n, q, s);
        o.rows.push_back({std::to_string(n), std::to_string(q), std::to_string(s), lo.str(), up.str(), decimal(lo),
                          decimal(up)});
    }
    return o;
}

std::string attribute(const CampaignCell& cell, const std::string& key) {
    for (const auto& [k, v] : cell.attributes) {
        if (k == key) return v;
    }
    return "";
}

Output reduction_table(const Config& cfg) {
    const CampaignResult res = reduction_analysis(cfg.n.value_or(4), cfg.q.value_or(4), cfg.s.value_or(1),
                                                  cfg.check.value_or(0), cfg.limits());
    Output o;
    o.header = {"residue", "codewords", "reduction_size", "verdict", "annotation"};
    for (const auto& cell : res.cells) {
        o.rows.push_back({cell.residue, std::to_string(cell.codewords), attribute(cell, "reduction_size"),
                          cell.verdict ? "pass" : "fail", kRecomputed});
    }
    return o;
}

Output torsion_table(const Config& cfg) {
    const unsigned n = cfg.n.value_or(4), q = cfg.q.value_or(4), s = cfg.s.value_or(1);
    const CampaignResult res = torsion_analysis(n, q, s, cfg.limits());
    const std::string modulus = weight_sequence(n, q, s)(n + 1).str();
    Output o;
    o.header = {"residue", "codewords", "torsion_size", "modulus", "annotation"};
    for (const auto& cell : res.cells) {
        o.rows.push_back({cell.residue, std::to_string(cell.codewords), attribute(cell, "torsion_size"), modulus,
                          kRecomputed});
    }
    return o;
}

struct TableEntry {
    std::string id;
    std::string about;
    std::function<Output(const Config&, std::istream&)> build;
};

const std::vector<TableEntry>& registry() {
    static const std::vector<TableEntry> entries = [] {
        auto plain = [](Output (*f)(const Config&)) {
            return [f](const Config& c, std::istream&) { return f(c); };
        };
        std::vector<TableEntry> e;
        e.push_back({"table2", "q-ary VT codebook and its map images (n=4 q=4 a=1 b=2 phi8)", plain(qary_vt_images)});
        e.push_back({"table3", "weight-shifted pairs with a shared deletion and their residue gaps (phi8)",
                     weight_shift_pairs});
        e.push_back({"table4", "quaternary Helberg codebook and its map images (n=4 s=1 a=13 phi9)",
                     plain(helberg_images)});
        e.push_back({"table5", "class sizes of quaternary Helberg codes (n=4 s=1)", plain(helberg_census_table)});
        e.push_back({"table6", "largest quaternary classes and the binary residues of their images (n=3..7)",
                     plain(max_residue_mapping)});
        e.push_back({"table7", "bounds next to the largest binary and image classes (n=2..6)",
                     plain(cardinality_table)});
        e.push_back({"table8", "largest image classes per (n, s) with their correction verdicts (n=3..6)",
                     plain(image_max_classes)});
        e.push_back({"table9", "binary Helberg codebook and its inverse map images (n=10 s=2 a=66 phi9)",
                     plain(binary_helberg_preimages)});
        e.push_back({"table10", "largest n=4 class, its images and the binary class they land in (a=40)",
                     [](const Config& c, std::istream&) { return aligned_classes(c, 4, 40); }});
        e.push_back({"table11", "largest n=5 class, its images and the binary class they land in (a=134)",
                     [](const Config& c, std::istream&) { return aligned_classes(c, 5, 134); }});
        e.push_back({"table12", "2-deletion spheres of mapped Helberg codewords (n=4 s=1 a=13 phi9)",
                     [](const Config& c, std::istream&) {
                         const auto p = HelbergParams::make(c.n.value_or(4), 4, c.s.value_or(1), c.a.value_or(13));
                         const Codebook code = image_code(p, find_map(c.map.value_or("phi9")), c.limits());
                         return sphere_rows(code, p.s() + 1, c.limits(), true);
                     }});
        e.push_back({"table13", "1-deletion spheres of inverse-mapped binary Helberg codewords (n=10 s=2 a=66)",
                     [](const Config& c, std::istream&) {
                         const auto p =
                             HelbergParams::make(c.n.value_or(10), 2, c.s.value_or(2), c.a.value_or(66));
                         const Codebook code = inverse_image_code(p, find_map(c.map.value_or("phi9")), c.limits());
                         return sphere_rows(code, p.s() / 2, c.limits(), false);
                     }});
        e.push_back({"table14", "1-deletion spheres of mapped q-ary VT codewords (n=4 a=1 b=2 phi8)",
                     [](const Config& c, std::istream&) {
                         const QaryVtParams p(c.n.value_or(4), 4, static_cast<unsigned>(c.a.value_or(1)),
                                              c.b.value_or(2));
                         const Codebook code = image_code(p, find_map(c.map.value_or("phi8")), c.limits());
                         return sphere_rows(code, 1, c.limits(), false);
                     }});
        e.push_back({"table15", "(a, b) class sizes of q-ary VT codes (n=4 q=4)", plain(vt_census_table)});
        e.push_back({"bounds", "lower and upper cardinality bounds (n=2..6 q=4 s=1)", plain(bounds_table)});
        e.push_back({"reduction", "mod-2 reduction size and correction verdict per residue (n=4 q=4 s=1)",
                     plain(reduction_table)});
        e.push_back({"torsion", "torsion code size per residue with the modulus (n=4 q=4 s=1)",
                     plain(torsion_table)});
        return e;
    }();
    return entries;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& table_catalog() {
    static const auto catalog = [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& e : registry()) out.emplace_back(e.id, e.about);
        return out;
    }();
    return catalog;
}

Output build_table(const std::string& id, const Config& cfg, std::istream& in) {
    for (const auto& e : registry()) {
        if (e.id != id) continue;
        Output o = e.build(cfg, in);
        o.json = {{"table", id}, {"columns", o.header}, {"rows", rows_to_json(o.header, o.rows)}, {"notes", o.notes}};
        return o;
    }
    throw UsageError("unknown table id " + id);
}

}  // namespace naisargik::cli
