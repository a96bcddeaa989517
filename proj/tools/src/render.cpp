#include "naisargik/cli/render.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace naisargik::cli {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

nlohmann::json cell_value(const std::string& s) {
    long long v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    const bool plain = !s.empty() && ec == std::errc() && ptr == end && (s == "0" || s[0] != '0') &&
                       s[0] != '-';
    if (plain) return v;
    if (s == "true") return true;
    if (s == "false") return false;
    return s;
}

}  // namespace

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> words_to_strings(const std::vector<Word>& words) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(to_string(w));
    return out;
}

nlohmann::json rows_to_json(const std::vector<std::string>& header,
                            const std::vector<std::vector<std::string>>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < header.size() && i < row.size(); ++i) {
            obj[header[i]] = cell_value(row[i]);
        }
        arr.push_back(std::move(obj));
    }
    return arr;
}

void render(std::ostream& out, const Output& output, Format format) {
    switch (format) {
        case Format::json:
            out << output.json.dump(2) << '\n';
            return;
        case Format::csv:
            if (!output.header.empty()) {
                std::vector<std::string> h;
                for (const auto& c : output.header) h.push_back(csv_field(c));
                out << join(h, ",") << '\n';
            }
            for (const auto& row : output.rows) {
                std::vector<std::string> r;
                for (const auto& c : row) r.push_back(csv_field(c));
                out << join(r, ",") << '\n';
            }
            return;
        case Format::text:
            if (output.header.size() == 1) {
                for (const auto& row : output.rows) out << row.front() << '\n';
            } else {
                std::vector<std::size_t> width(output.header.size(), 0);
                for (std::size_t i = 0; i < output.header.size(); ++i) width[i] = output.header[i].size();
                for (const auto& row : output.rows) {
                    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
                        width[i] = std::max(width[i], row[i].size());
                    }
                }
                auto line = [&](const std::vector<std::string>& cells) {
                    std::string s;
                    for (std::size_t i = 0; i < cells.size(); ++i) {
                        if (i) s += "  ";
                        s += cells[i];
                        if (i + 1 < cells.size() && i < width.size()) s.append(width[i] - cells[i].size(), ' ');
                    }
                    out << s << '\n';
                };
                if (!output.header.empty()) line(output.header);
                for (const auto& row : output.rows) line(row);
            }
            for (const auto& note : output.notes) out << "# " << note << '\n';
            return;
    }
}

nlohmann::json to_json(const CorrectionReport& report) {
    nlohmann::json j{{"deletions", report.s}, {"verdict", report.verdict}};
    if (report.witness) {
        j["witness"] = {{"first", to_string(report.witness->first)},
                        {"second", to_string(report.witness->second)},
                        {"shared", to_string(report.witness->shared)}};
    }
    return j;
}

nlohmann::json to_json(const CampaignResult& result) {
    nlohmann::json grid = nlohmann::json::object();
    for (const auto& [k, v] : result.grid) grid[k] = cell_value(v);
    nlohmann::json cells = nlohmann::json::array();
    nlohmann::json counterexample = nullptr;
    for (const auto& cell : result.cells) {
        nlohmann::json c{{"residue", cell_value(cell.residue)},
                         {"codewords", cell.codewords},
                         {"verdict", cell.verdict}};
        if (!cell.attributes.empty()) {
            nlohmann::json attrs = nlohmann::json::object();
            for (const auto& [k, v] : cell.attributes) attrs[k] = cell_value(v);
            c["attributes"] = std::move(attrs);
        }
        if (cell.report) c["report"] = to_json(*cell.report);
        if (!cell.evidence.empty()) c["evidence"] = words_to_strings(cell.evidence);
        if (!cell.verdict && counterexample.is_null()) counterexample = c;
        cells.push_back(std::move(c));
    }
    nlohmann::json residues = nlohmann::json::array();
    for (const auto& r : result.max_residues) residues.push_back(cell_value(r));
    return {{"campaign", result.name},
            {"grid", grid},
            {"holds", result.holds},
            {"max_codewords", result.max_codewords},
            {"max_residues", residues},
            {"notes", result.notes},
            {"counterexample", counterexample},
            {"cells", cells}};
}

Output campaign_output(const CampaignResult& result) {
    Output o;
    o.header = {"field", "value"};
    std::vector<std::string> grid;
    for (const auto& [k, v] : result.grid) grid.push_back(k + "=" + v);
    const auto failures = result.failures();
    o.rows = {{"campaign", result.name},
              {"grid", join(grid)},
              {"cells", std::to_string(result.cells.size())},
              {"failing_cells", std::to_string(failures.size())},
              {"max_codewords", std::to_string(result.max_codewords)},
              {"max_residues", join(result.max_residues)},
              {"verdict", result.holds ? "PASS" : "FAIL"}};
    for (const auto& n : result.notes) o.rows.push_back({"note", n});
    o.json = to_json(result);
    if (!result.holds && !o.json["counterexample"].is_null()) {
        o.rows.push_back({"counterexample", o.json["counterexample"].dump()});
    }
    return o;
}

}  // namespace naisargik::cli
