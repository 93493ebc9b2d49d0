#pragma once

#include "angleworks/exact.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aw::cli {

enum class Format { plain, csv, latex, json };
Format parse_format(const std::string& s);

struct Record {
    std::string index_name;  // "k" or "l"
    int index = 0;
    std::optional<PiNumber> exact;
    double value = 0;
    double abs_error = 0;
    std::string provenance;
    std::optional<std::string> decimal;  // preset high-precision text
    std::vector<std::pair<std::string, std::string>> extra;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Record> rows;
};

struct RenderOptions {
    Format format = Format::plain;
    std::optional<int> digits;  // plain: adds the decimal column
    std::optional<double> timing_ms;
};

std::string render(const Report& report, const RenderOptions& opt);

// Same string in every format; `digits` places after the point.
std::string decimal_text(const Record& r, int digits);

nlohmann::json pi_to_json(const PiNumber& x);
PiNumber pi_from_json(const nlohmann::json& j);
std::string pi_latex(const PiNumber& x);

// "P/Q" or an integer gives the exact path when 2 beta is integral;
// anything else is read as a double and goes numeric.
struct BetaArg {
    bool exact = false;
    long twice_beta = 0;
    double value = 0;
    std::string notice;
};
BetaArg parse_beta(const std::string& text);

}  // namespace aw::cli
