#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "naisargik/verify.hpp"

namespace naisargik::cli {

enum class Format { text, csv, json };

/// Rows of strings plus a JSON document carrying the same content.
/// Text and CSV render `header`/`rows`; JSON renders `json`.
struct Output {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
    nlohmann::json json;
};

void render(std::ostream& out, const Output& output, Format format);

/// Rows keyed by header, with integer-looking cells emitted as numbers.
nlohmann::json rows_to_json(const std::vector<std::string>& header,
                            const std::vector<std::vector<std::string>>& rows);

nlohmann::json to_json(const CorrectionReport& report);
nlohmann::json to_json(const CampaignResult& result);

/// Campaign summary for text mode, one fact per line.
Output campaign_output(const CampaignResult& result);

std::string join(const std::vector<std::string>& parts, const std::string& sep = " ");
std::vector<std::string> words_to_strings(const std::vector<Word>& words);

}  // namespace naisargik::cli
