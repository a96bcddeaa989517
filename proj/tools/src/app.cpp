#include "naisargik/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "command.hpp"
#include "naisargik/errors.hpp"
#include "naisargik/verify.hpp"

namespace naisargik::cli {

namespace {

nlohmann::json natural_json(const Natural& v) {
    if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

Output codebook_output(const std::string& kind, nlohmann::json params, const Codebook& code) {
    Output o;
    o.header = {"codeword"};
    for (const auto& w : code) o.rows.push_back({to_string(w)});
    o.json = {{"kind", kind}, {"params", std::move(params)}, {"count", code.size()},
              {"codewords", words_to_strings(code)}};
    return o;
}

unsigned need(const std::optional<unsigned>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing --") + flag);
    return *v;
}

Output cmd_gen(const std::string& kind, const Config& cfg) {
    const Limits limits = cfg.limits();
    if (kind == "vt-binary") {
        const BinaryVtParams p(need(cfg.n, "n"), static_cast<unsigned>(cfg.a.value_or(0)));
        return codebook_output(kind, {{"n", p.n}, {"a", p.a}}, binary_vt_code(p, limits));
    }
    if (kind == "vt-qary") {
        const QaryVtParams p(need(cfg.n, "n"), cfg.q.value_or(4), static_cast<unsigned>(cfg.a.value_or(0)),
                             cfg.b.value_or(0));
        return codebook_output(kind, {{"n", p.n}, {"q", p.q}, {"a", p.a}, {"b", p.b}},
                               qary_vt_code(p, limits));
    }
    const auto p = HelbergParams::make(need(cfg.n, "n"), cfg.q.value_or(2), cfg.s.value_or(1), cfg.a.value_or(0));
    Output o = codebook_output(kind, {{"n", p.n()}, {"q", p.q()}, {"s", p.s()}, {"a", p.a()}},
                               helberg_code(p, limits));
    nlohmann::json weights = nlohmann::json::array();
    for (unsigned i = 1; i <= p.n(); ++i) weights.push_back(natural_json(p.weights()(i)));
    o.json["weights"] = std::move(weights);
    o.json["modulus"] = natural_json(p.modulus());
    return o;
}

Output cmd_map(const Config& cfg, std::istream& in) {
    // Accepts "<direction> [words]" or "<map> <direction> [words]".
    std::vector<std::string> args = cfg.positional;
    std::string map_name = cfg.map.value_or("");
    if (!args.empty() && args.front() != "forward" && args.front() != "inverse") {
        if (!map_name.empty()) throw UsageError("map given twice");
        map_name = args.front();
        args.erase(args.begin());
    }
    if (map_name.empty()) throw UsageError("missing map name");
    if (args.empty()) throw UsageError("missing direction (forward or inverse)");
    const std::string direction = args.front();
    if (direction != "forward" && direction != "inverse") throw UsageError("unknown direction " + direction);
    args.erase(args.begin());
    const SymbolMap& map = find_map(map_name);

    const std::vector<std::string> inputs = args.empty() ? read_lines(cfg.input, in) : args;
    Output o;
    o.header = {direction == "forward" ? "image" : "preimage"};
    nlohmann::json records = nlohmann::json::array();
    for (const auto& text : inputs) {
        const Word mapped = direction == "forward" ? apply_map(map, parse_word(text, 4))
                                                   : invert_map(map, parse_word(text, 2));
        o.rows.push_back({to_string(mapped)});
        records.push_back({{"input", text}, {"output", to_string(mapped)}});
    }
    o.json = {{"map", map.name()}, {"direction", direction}, {"records", records}};
    return o;
}

Output cmd_sphere(const Config& cfg) {
    if (cfg.positional.size() != 1) throw UsageError("sphere takes exactly one word");
    const std::string& text = cfg.positional.front();
    unsigned q = cfg.q.value_or(0);
    if (q == 0) {
        // Smallest of 2, 4, 10 that holds every digit.
        char top = '0';
        for (char c : text) top = std::max(top, c);
        q = top <= '1' ? 2 : top <= '3' ? 4 : 10;
    }
    const Sphere sphere = deletion_sphere(parse_word(text, q), cfg.s.value_or(1), cfg.limits());
    Output o;
    o.header = {"member"};
    for (const auto& w : sphere.members) o.rows.push_back({to_string(w)});
    o.json = {{"center", text}, {"q", q}, {"deletions", sphere.deletions}, {"size", sphere.size()},
              {"members", words_to_strings(sphere.members)}};
    return o;
}

std::vector<SymbolMap> parse_maps(const std::string& spec) {
    if (spec.empty()) {
        const auto& reg = naisargik_registry();
        return {reg.begin(), reg.begin() + 8};
    }
    std::vector<SymbolMap> out;
    std::stringstream ss(spec);
    std::string item;
    static const std::regex range(R"(phi(\d)\.\.phi(\d))");
    while (std::getline(ss, item, ',')) {
        std::smatch m;
        if (std::regex_match(item, m, range)) {
            const int lo = std::stoi(m[1]);
            const int hi = std::stoi(m[2]);
            if (lo > hi) throw UsageError("empty map range " + item);
            for (int k = lo; k <= hi; ++k) out.push_back(find_map("phi" + std::to_string(k)));
        } else {
            out.push_back(find_map(item));
        }
    }
    if (out.empty()) throw UsageError("no maps selected");
    return out;
}

CampaignResult cmd_verify(const std::string& campaign, const Config& cfg) {
    const Limits limits = cfg.limits();
    const auto map = [&] { return find_map(cfg.map.value_or("phi9")); };
    if (campaign == "thm1") return verify_image_correction(cfg.n.value_or(4), cfg.s.value_or(1), map(), limits);
    if (campaign == "thm2") return verify_inverse_correction(cfg.n.value_or(10), cfg.s.value_or(2), map(), limits);
    if (campaign == "conj1") {
        const unsigned n = cfg.n.value_or(4);
        const auto maps = parse_maps(cfg.maps);
        return verify_weight_conjecture(cfg.n_min.value_or(n), n, maps, limits);
    }
    if (campaign == "conj2") return verify_bijection_conjecture(cfg.n.value_or(4), map(), limits);
    if (campaign == "reduction") {
        return reduction_analysis(cfg.n.value_or(4), cfg.q.value_or(4), cfg.s.value_or(1), cfg.check.value_or(0),
                                  limits);
    }
    if (campaign == "torsion") return torsion_analysis(cfg.n.value_or(4), cfg.q.value_or(4), cfg.s.value_or(1), limits);
    if (campaign == "vt1") return verify_binary_vt(cfg.n.value_or(8), limits);
    return verify_helberg_self(cfg.n.value_or(4), cfg.q.value_or(4), cfg.s.value_or(1), limits);
}

Format parse_format(const std::string& name, Format fallback) {
    if (name.empty()) return fallback;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "text") return Format::text;
    throw UsageError("unknown format " + name);
}

// "n=5" style tokens become "--n=5"; everything else passes through.
std::vector<std::string> normalize(const std::vector<std::string>& args) {
    static const std::regex kv(R"([a-z][a-z-]*=.*)");
    std::vector<std::string> out;
    for (const auto& a : args) out.push_back(std::regex_match(a, kv) ? "--" + a : a);
    return out;
}

void add_common(CLI::App* app, Config& cfg) {
    app->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app->add_option("--max-enum", cfg.max_enum, "Largest ambient space to enumerate");
    app->add_option("--workers", cfg.workers, "Worker threads for chunked enumeration");
}

void add_params(CLI::App* app, Config& cfg, const std::string& which) {
    for (char c : which) {
        switch (c) {
            case 'n': app->add_option("--n", cfg.n, "Length (upper end of a range)"); break;
            case 'N': app->add_option("--n-min", cfg.n_min, "Lower end of a length range"); break;
            case 'q': app->add_option("--q", cfg.q, "Alphabet size"); break;
            case 's': app->add_option("--s", cfg.s, "Deletion budget"); break;
            case 'a': app->add_option("--a", cfg.a, "Residue"); break;
            case 'b': app->add_option("--b", cfg.b, "Symbol-sum residue"); break;
            case 'm': app->add_option("--map", cfg.map, "Map name (phi1..phi9 or perm-k)"); break;
            case 'M': app->add_option("--maps", cfg.maps, "Comma list of maps, ranges like phi1..phi8"); break;
            case 'c': app->add_option("--check", cfg.check, "Deletions to check (0 means s+1)"); break;
            case 'i': app->add_option("--input", cfg.input, "Input file, '-' for stdin"); break;
            default: break;
        }
    }
}

}  // namespace

Limits Config::limits() const {
    if (max_enum < 1) throw UsageError("--max-enum must be at least 1");
    if (workers < 1) throw UsageError("--workers must be at least 1");
    Limits l;
    l.max_enumeration = max_enum;
    l.workers = workers;
    return l;
}

std::vector<std::string> read_lines(const std::string& path, std::istream& in) {
    std::ifstream file;
    std::istream* src = &in;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw UsageError("cannot open " + path);
        src = &file;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(*src, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

int run(const std::vector<std::string>& raw_args, std::istream& in, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Deletion-correcting codes over Z4 and their binary images", "naisargik"};
    app.require_subcommand(1);

    // Each leaf sets `action`; it runs after parsing succeeds.
    std::function<int()> action;
    auto emit = [&](const Output& o, Format fallback) { render(out, o, parse_format(cfg.format, fallback)); };

    auto* gen = app.add_subcommand("gen", "Generate a codebook");
    gen->require_subcommand(1);
    for (const auto& [kind, params] : std::vector<std::pair<std::string, std::string>>{
             {"vt-binary", "na"}, {"vt-qary", "nqab"}, {"helberg", "nqsa"}}) {
        auto* leaf = gen->add_subcommand(kind, "Codebook of kind " + kind);
        add_params(leaf, cfg, params);
        add_common(leaf, cfg);
        leaf->callback([&, k = kind] { action = [&, k] { emit(cmd_gen(k, cfg), Format::text); return 0; }; });
    }

    auto* map = app.add_subcommand("map", "Apply a symbol map forward or inverse");
    add_params(map, cfg, "mi");
    add_common(map, cfg);
    map->add_option("args", cfg.positional, "[map] forward|inverse [words...]");
    map->callback([&] { action = [&] { emit(cmd_map(cfg, in), Format::text); return 0; }; });

    auto* sphere = app.add_subcommand("sphere", "Deletion sphere of a word");
    add_params(sphere, cfg, "qs");
    add_common(sphere, cfg);
    sphere->add_option("word", cfg.positional, "Center word")->required();
    sphere->callback([&] { action = [&] { emit(cmd_sphere(cfg), Format::text); return 0; }; });

    auto* verify = app.add_subcommand("verify", "Run a verification campaign");
    verify->require_subcommand(1);
    for (const auto& [campaign, params, about] : std::vector<std::tuple<std::string, std::string, std::string>>{
             {"thm1", "nsm", "Images of every quaternary Helberg class correct s+1 deletions"},
             {"thm2", "nsm", "Inverse images of every binary Helberg class correct floor(s/2) deletions"},
             {"conj1", "nNM", "Same-class images with intersecting spheres share a weight"},
             {"conj2", "nm", "Maximum quaternary classes land inside one binary class"},
             {"reduction", "nqsc", "Mod-2 reductions: some residues correct, some do not"},
             {"torsion", "nqs", "Torsion codes stay trivial"},
             {"vt1", "n", "Every binary VT code corrects one deletion"},
             {"helberg-self", "nqs", "Every Helberg class corrects s deletions"}}) {
        auto* leaf = verify->add_subcommand(campaign, about);
        add_params(leaf, cfg, params);
        add_common(leaf, cfg);
        leaf->callback([&, c = campaign] {
            action = [&, c] {
                const CampaignResult result = cmd_verify(c, cfg);
                Output o = campaign_output(result);
                if (parse_format(cfg.format, Format::text) == Format::csv) {
                    o.header = {"residue", "codewords", "verdict"};
                    o.rows.clear();
                    for (const auto& cell : result.cells) {
                        o.rows.push_back({cell.residue, std::to_string(cell.codewords), cell.verdict ? "pass" : "fail"});
                    }
                }
                emit(o, Format::text);
                return result.holds ? kOk : kViolation;
            };
        });
    }

    auto* tables = app.add_subcommand("tables", "Emit a recomputed table");
    std::string table_id;
    std::string catalog = "Table id:";
    for (const auto& [id, about] : table_catalog()) catalog += "\n  " + id + "  " + about;
    tables->add_option("id", table_id, catalog)->required();
    add_params(tables, cfg, "nNqsabmci");
    add_common(tables, cfg);
    tables->callback([&] { action = [&] { emit(build_table(table_id, cfg, in), Format::csv); return 0; }; });

    std::vector<std::string> args = normalize(raw_args);
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    try {
        app.parse(args);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        return action ? action() : kUsage;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const OverflowError& e) {
        err << "capacity: " << e.what() << '\n';
        return kResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace naisargik::cli
