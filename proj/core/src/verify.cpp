#include "naisargik/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "naisargik/enumerate.hpp"
#include "naisargik/errors.hpp"

namespace naisargik {

namespace {

struct Job {
    std::string residue;
    const Codebook* code;
};

// Runs one cell per job on the configured workers; cells come back in job order.
std::vector<CampaignCell> run_cells(const std::vector<Job>& jobs, const Limits& limits,
                                    const std::function<CampaignCell(const Job&)>& check) {
    std::vector<CampaignCell> cells(jobs.size());
    run_chunks(jobs.size(), limits.workers, [&](std::size_t i) { cells[i] = check(jobs[i]); });
    return cells;
}

void summarize(CampaignResult& result) {
    result.max_codewords = 0;
    result.max_residues.clear();
    for (const auto& cell : result.cells) {
        if (cell.codewords > result.max_codewords) {
            result.max_codewords = cell.codewords;
            result.max_residues.clear();
        }
        if (cell.codewords == result.max_codewords) result.max_residues.push_back(cell.residue);
    }
}

bool all_pass(const std::vector<CampaignCell>& cells) {
    return std::all_of(cells.begin(), cells.end(), [](const CampaignCell& c) { return c.verdict; });
}

CampaignCell sphere_cell(const Job& job, const Codebook& checked, std::size_t deletions,
                         const Limits& limits) {
    CampaignCell cell;
    cell.residue = job.residue;
    cell.codewords = job.code->size();
    CorrectionReport report = code_is_s_correcting(checked, deletions, limits);
    cell.verdict = report.verdict;
    if (!report.verdict) cell.report = std::move(report);
    return cell;
}

template <class Key>
std::vector<Job> jobs_from(const std::map<Key, Codebook>& classes,
                           const std::function<std::string(const Key&)>& label) {
    std::vector<Job> jobs;
    jobs.reserve(classes.size());
    for (const auto& [key, code] : classes) jobs.push_back({label(key), &code});
    return jobs;
}

std::vector<Job> helberg_jobs(const std::map<std::uint64_t, Codebook>& classes) {
    return jobs_from<std::uint64_t>(classes, [](const std::uint64_t& a) { return std::to_string(a); });
}

std::string param(unsigned v) { return std::to_string(v); }

}  // namespace

const CampaignCell* CampaignResult::find(std::string_view residue) const {
    for (const auto& cell : cells) {
        if (cell.residue == residue) return &cell;
    }
    return nullptr;
}

std::vector<const CampaignCell*> CampaignResult::failures() const {
    std::vector<const CampaignCell*> out;
    for (const auto& cell : cells) {
        if (!cell.verdict) out.push_back(&cell);
    }
    return out;
}

Codebook image_code(std::span<const Word> quaternary, const SymbolMap& map) {
    Codebook out;
    out.reserve(quaternary.size());
    for (const Word& w : quaternary) out.push_back(apply_map(map, w));
    canonicalize(out);
    return out;
}

Codebook image_code(const HelbergParams& params, const SymbolMap& map, const Limits& limits) {
    if (params.q() != 4) throw DomainError("image codes need a quaternary Helberg code");
    return image_code(helberg_code(params, limits), map);
}

Codebook image_code(const QaryVtParams& params, const SymbolMap& map, const Limits& limits) {
    if (params.q != 4) throw DomainError("image codes need a quaternary VT code");
    return image_code(qary_vt_code(params, limits), map);
}

Codebook inverse_image_code(std::span<const Word> binary, const SymbolMap& map) {
    Codebook out;
    out.reserve(binary.size());
    for (const Word& w : binary) out.push_back(invert_map(map, w));
    canonicalize(out);
    return out;
}

Codebook inverse_image_code(const HelbergParams& params, const SymbolMap& map,
                            const Limits& limits) {
    if (params.q() != 2) throw DomainError("inverse images need a binary Helberg code");
    if (params.n() % 2 != 0) throw DomainError("inverse images need an even binary length");
    return inverse_image_code(helberg_code(params, limits), map);
}

std::uint64_t image_residue(const Word& x, const SymbolMap& map,
                            const WeightSequence& binary_weights) {
    if (binary_weights.q() != 2) throw DomainError("image residues use binary weights");
    if (binary_weights.size() != 2 * x.size() + 1) {
        throw DomainError("binary weights must cover 2n + 1 = " + std::to_string(2 * x.size() + 1) +
                          " entries, got " + std::to_string(binary_weights.size()));
    }
    const Word image = apply_map(map, x);
    const Natural& m = binary_weights(static_cast<long long>(binary_weights.size()));
    return static_cast<std::uint64_t>(moment(image, binary_weights) % m);
}

CampaignResult verify_image_correction(unsigned n, unsigned s, const SymbolMap& map,
                                       const Limits& limits) {
    const auto classes = helberg_classes(n, 4, s, limits);
    CampaignResult result;
    result.name = "image-correction";
    result.grid = {{"n", param(n)}, {"q", "4"}, {"s", param(s)}, {"map", map.name()},
                   {"checked_deletions", param(s + 1)}};
    result.cells = run_cells(helberg_jobs(classes), limits, [&](const Job& job) {
        return sphere_cell(job, image_code(*job.code, map), s + 1, limits);
    });
    result.holds = all_pass(result.cells);
    summarize(result);
    return result;
}

CampaignResult verify_inverse_correction(unsigned N, unsigned s, const SymbolMap& map,
                                         const Limits& limits) {
    if (N % 2 != 0) throw DomainError("inverse images need an even binary length");
    const auto classes = helberg_classes(N, 2, s, limits);
    CampaignResult result;
    result.name = "inverse-correction";
    result.grid = {{"n", param(N)}, {"q", "2"}, {"s", param(s)}, {"map", map.name()},
                   {"checked_deletions", param(s / 2)}};
    result.cells = run_cells(helberg_jobs(classes), limits, [&](const Job& job) {
        return sphere_cell(job, inverse_image_code(*job.code, map), s / 2, limits);
    });
    result.holds = all_pass(result.cells);
    summarize(result);
    return result;
}

CampaignResult verify_bijection_conjecture(unsigned n, const SymbolMap& map, const Limits& limits) {
    const auto quaternary = helberg_classes(n, 4, 1, limits);
    const auto binary = helberg_classes(2 * n, 2, 2, limits);
    const WeightSequence binary_weights(2, 2, 2 * std::size_t{n} + 1);

    std::uint64_t best = 0;
    for (const auto& [a, code] : quaternary) best = std::max<std::uint64_t>(best, code.size());
    std::vector<Job> jobs;
    for (const auto& [a, code] : quaternary) {
        if (code.size() == best) jobs.push_back({std::to_string(a), &code});
    }

    CampaignResult result;
    result.name = "bijection-conjecture";
    result.grid = {{"n", param(n)}, {"q", "4"}, {"s", "1"}, {"map", map.name()},
                   {"binary_n", param(2 * n)}, {"binary_s", "2"}};
    result.cells = run_cells(jobs, limits, [&](const Job& job) {
        CampaignCell cell;
        cell.residue = job.residue;
        cell.codewords = job.code->size();
        const std::uint64_t target = image_residue(job.code->front(), map, binary_weights);
        bool consistent = true;
        for (const Word& x : *job.code) {
            if (image_residue(x, map, binary_weights) != target) {
                consistent = false;
                cell.evidence.push_back(x);
            }
        }
        const Codebook images = image_code(*job.code, map);
        auto it = binary.find(target);
        static const Codebook empty;
        const Codebook& partner = it == binary.end() ? empty : it->second;
        bool subset = true;
        for (const Word& X : images) {
            if (!std::binary_search(partner.begin(), partner.end(), X)) {
                subset = false;
                cell.evidence.push_back(X);
            }
        }
        const bool equal = subset && images.size() == partner.size();
        cell.verdict = consistent && subset;
        cell.attributes = {{"image_residue", std::to_string(target)},
                           {"consistent", consistent ? "true" : "false"},
                           {"subset", subset ? "true" : "false"},
                           {"equal", equal ? "true" : "false"},
                           {"binary_class_size", std::to_string(partner.size())}};
        return cell;
    });
    result.holds = all_pass(result.cells);
    summarize(result);
    const bool all_equal = std::all_of(result.cells.begin(), result.cells.end(), [](const auto& c) {
        return std::find(c.attributes.begin(), c.attributes.end(),
                         std::pair<std::string, std::string>{"equal", "true"}) != c.attributes.end();
    });
    result.notes.push_back(all_equal ? "every maximum class maps onto its binary class"
                                     : "some maximum class maps onto a proper subset");
    return result;
}

CampaignResult verify_weight_conjecture(unsigned n_lo, unsigned n_hi,
                                        std::span<const SymbolMap> maps, const Limits& limits) {
    if (n_lo < 1 || n_lo > n_hi) throw DomainError("length range must satisfy 1 <= lo <= hi");
    CampaignResult result;
    result.name = "weight-conjecture";
    std::string names;
    for (const auto& m : maps) names += (names.empty() ? "" : ",") + m.name();
    result.grid = {{"n_lo", param(n_lo)}, {"n_hi", param(n_hi)}, {"q", "4"}, {"maps", names}};

    // Cells are (n, map); each scan already parallelizes nothing, so spread them.
    std::vector<std::pair<unsigned, const SymbolMap*>> grid;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        for (const auto& m : maps) grid.emplace_back(n, &m);
    }
    Limits inner = limits;
    inner.workers = 1;
    result.cells.resize(grid.size());
    run_chunks(grid.size(), limits.workers, [&](std::size_t i) {
        const auto [n, map] = grid[i];
        const Conjecture1Report scan = conjecture1_scan(n, *map, inner);
        CampaignCell& cell = result.cells[i];
        cell.residue = "n=" + std::to_string(n) + "," + map->name();
        cell.codewords = scan.intersecting_pairs;
        cell.verdict = scan.holds;
        cell.attributes = {{"n", std::to_string(n)},
                           {"map", map->name()},
                           {"intersecting_pairs", std::to_string(scan.intersecting_pairs)}};
        if (scan.counterexample) {
            const auto& c = *scan.counterexample;
            cell.evidence = {c.x, c.y, c.X, c.Y};
        }
    });
    result.holds = all_pass(result.cells);
    summarize(result);
    result.notes.push_back("codewords counts intersecting same-class image pairs");
    return result;
}

std::vector<CardinalityRow> cardinality_comparison(unsigned n_lo, unsigned n_hi,
                                                   const Limits& limits) {
    if (n_lo < 1 || n_lo > n_hi) throw DomainError("length range must satisfy 1 <= lo <= hi");
    std::vector<CardinalityRow> rows;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        CardinalityRow row;
        row.n = n;
        row.lower = lower_bound(n, 4, 1);
        row.upper = upper_bound(n, 4, 1);
        row.binary_max = helberg_census(2 * n, 2, 2, limits).max_count();
        row.image_max = helberg_census(n, 4, 1, limits).max_count();
        rows.push_back(std::move(row));
    }
    return rows;
}

CampaignResult reduction_analysis(unsigned n, unsigned q, unsigned s, unsigned check_deletions,
                                  const Limits& limits) {
    if (q != 4) throw DomainError("reduction codes are defined for quaternary codes");
    const unsigned checked = check_deletions == 0 ? s + 1 : check_deletions;
    const auto classes = helberg_classes(n, q, s, limits);
    CampaignResult result;
    result.name = "reduction";
    result.grid = {{"n", param(n)}, {"q", param(q)}, {"s", param(s)},
                   {"checked_deletions", param(checked)}};
    result.cells = run_cells(helberg_jobs(classes), limits, [&](const Job& job) {
        const Codebook reduced = reduction_code(*job.code);
        if (checked > n) {
            CampaignCell cell;
            cell.residue = job.residue;
            cell.codewords = job.code->size();
            cell.verdict = reduced.size() <= 1;
            if (!cell.verdict) {
                // Every word shrinks to the empty word, so any two collide.
                cell.report = CorrectionReport{checked, false,
                                               CollisionWitness{reduced[0], reduced[1], Word(2, {})}};
            }
            cell.attributes = {{"reduction_size", std::to_string(reduced.size())}};
            return cell;
        }
        CampaignCell cell = sphere_cell(job, reduced, checked, limits);
        cell.attributes = {{"reduction_size", std::to_string(reduced.size())}};
        return cell;
    });
    const auto passes = std::count_if(result.cells.begin(), result.cells.end(),
                                      [](const CampaignCell& c) { return c.verdict; });
    const auto fails = static_cast<std::ptrdiff_t>(result.cells.size()) - passes;
    result.holds = passes > 0 && fails > 0;
    summarize(result);
    result.notes.push_back(std::to_string(passes) + " residues pass, " + std::to_string(fails) +
                           " fail");
    return result;
}

CampaignResult torsion_analysis(unsigned n, unsigned q, unsigned s, const Limits& limits) {
    if (q != 4) throw DomainError("torsion codes are defined for quaternary codes");
    const auto classes = helberg_classes(n, q, s, limits);
    CampaignResult result;
    result.name = "torsion";
    result.grid = {{"n", param(n)}, {"q", param(q)}, {"s", param(s)}};
    result.cells = run_cells(helberg_jobs(classes), limits, [&](const Job& job) {
        CampaignCell cell;
        cell.residue = job.residue;
        cell.codewords = job.code->size();
        Codebook torsion = torsion_code(*job.code);
        cell.attributes = {{"torsion_size", std::to_string(torsion.size())}};
        cell.verdict = torsion.size() <= 1;
        if (!cell.verdict) cell.evidence = std::move(torsion);
        return cell;
    });
    result.holds = all_pass(result.cells);
    summarize(result);
    return result;
}

CampaignResult verify_binary_vt(unsigned n, const Limits& limits) {
    std::map<unsigned, Codebook> classes;
    for (unsigned a = 0; a <= n; ++a) classes.emplace(a, binary_vt_code(BinaryVtParams(n, a), limits));
    CampaignResult result;
    result.name = "binary-vt";
    result.grid = {{"n", param(n)}, {"q", "2"}, {"checked_deletions", "1"}};
    const auto jobs = jobs_from<unsigned>(classes, [](const unsigned& a) { return std::to_string(a); });
    result.cells = run_cells(jobs, limits, [&](const Job& job) {
        return sphere_cell(job, *job.code, 1, limits);
    });
    result.holds = all_pass(result.cells);
    summarize(result);
    return result;
}

CampaignResult verify_helberg_self(unsigned n, unsigned q, unsigned s, const Limits& limits) {
    const auto classes = helberg_classes(n, q, s, limits);
    CampaignResult result;
    result.name = "helberg-self";
    result.grid = {{"n", param(n)}, {"q", param(q)}, {"s", param(s)}, {"checked_deletions", param(s)}};
    result.cells = run_cells(helberg_jobs(classes), limits, [&](const Job& job) {
        if (s > n) {
            CampaignCell cell{job.residue, job.code->size(), job.code->size() <= 1, {}, {}, {}};
            if (!cell.verdict) {
                cell.report = CorrectionReport{s, false,
                                               CollisionWitness{(*job.code)[0], (*job.code)[1], Word(q, {})}};
            }
            return cell;
        }
        return sphere_cell(job, *job.code, s, limits);
    });
    result.holds = all_pass(result.cells);
    summarize(result);
    return result;
}

}  // namespace naisargik
