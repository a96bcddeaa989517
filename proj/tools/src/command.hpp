#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "naisargik/cli/render.hpp"
#include "naisargik/limits.hpp"

namespace naisargik::cli {

// Parsed flags. Unset optionals fall back to per-command defaults.
struct Config {
    std::optional<unsigned> n;
    std::optional<unsigned> n_min;
    std::optional<unsigned> q;
    std::optional<unsigned> s;
    std::optional<std::uint64_t> a;
    std::optional<unsigned> b;
    std::optional<unsigned> check;
    std::optional<std::string> map;
    std::string maps;
    std::string input;
    std::string format;
    std::uint64_t max_enum = std::uint64_t{1} << 24;
    unsigned workers = 1;
    std::vector<std::string> positional;

    Limits limits() const;
};

/// Known table ids with a one-line description each.
const std::vector<std::pair<std::string, std::string>>& table_catalog();

Output build_table(const std::string& id, const Config& cfg, std::istream& in);

/// Lines of a file path, or of `in` when the path is empty or "-".
std::vector<std::string> read_lines(const std::string& path, std::istream& in);

}  // namespace naisargik::cli
