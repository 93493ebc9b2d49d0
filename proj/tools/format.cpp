#include "format.hpp"

#include <cmath>
#include <cstdio>
#include <regex>
#include <sstream>

namespace aw::cli {

Format parse_format(const std::string& s) {
    if (s == "plain") return Format::plain;
    if (s == "csv") return Format::csv;
    if (s == "latex") return Format::latex;
    if (s == "json") return Format::json;
    throw DomainError("unknown format: " + s);
}

std::string decimal_text(const Record& r, int digits) {
    if (r.decimal) return *r.decimal;
    if (r.exact) return to_decimal(*r.exact, digits);
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", digits, r.value);
    return buf;
}

nlohmann::json pi_to_json(const PiNumber& x) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [e, q] : x.terms())
        a.push_back({{"half_exp", e}, {"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}});
    return a;
}

PiNumber pi_from_json(const nlohmann::json& j) {
    PiNumber x;
    for (const auto& t : j) {
        Rational q(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
        q.canonicalize();
        x += PiNumber(q, t.at("half_exp").get<int>());
    }
    return x;
}

namespace {

std::string pi_power_latex(int e) {
    if (e == 2) return "\\pi";
    if (e % 2 == 0) return "\\pi^{" + std::to_string(e / 2) + "}";
    return "\\pi^{" + std::to_string(e) + "/2}";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string value_text(const Record& r) {
    if (r.exact) return r.exact->to_string();
    return decimal_text(r, 15);
}

}  // namespace

std::string pi_latex(const PiNumber& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, q] : x.terms()) {
        Rational a = abs(q);
        std::string body;
        if (a.get_den() == 1)
            body = a == 1 && e != 0 ? "" : a.get_num().get_str();
        else
            body = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
        if (e != 0) body += pi_power_latex(e);
        out += first ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + ");
        out += body;
        first = false;
    }
    return out;
}

std::string render(const Report& report, const RenderOptions& opt) {
    std::ostringstream os;
    int digits = opt.digits.value_or(16);
    switch (opt.format) {
        case Format::plain: {
            if (!opt.digits) {
                for (size_t i = 0; i < report.rows.size(); ++i) os << (i ? ", " : "") << value_text(report.rows[i]);
                os << "\n";
                break;
            }
            for (const auto& r : report.rows) {
                os << r.index_name << "=" << r.index << "  " << value_text(r) << "  " << decimal_text(r, digits) << "  " << r.provenance;
                for (const auto& [k, v] : r.extra) os << "  " << k << "=" << v;
                os << "\n";
            }
            break;
        }
        case Format::csv: {
            for (const auto& [k, v] : report.params) os << csv_field(k) << ",";
            std::string idx = report.rows.empty() ? "index" : report.rows.front().index_name;
            os << idx << ",exact,decimal,abs_error,provenance";
            if (!report.rows.empty())
                for (const auto& [k, v] : report.rows.front().extra) os << "," << csv_field(k);
            os << "\n";
            for (const auto& r : report.rows) {
                for (const auto& [k, v] : report.params) os << csv_field(v) << ",";
                char err[64];
                std::snprintf(err, sizeof err, "%.3e", r.abs_error);
                os << r.index << "," << csv_field(r.exact ? r.exact->to_string() : "") << "," << decimal_text(r, digits) << ","
                   << err << "," << r.provenance;
                for (const auto& [k, v] : r.extra) os << "," << csv_field(v);
                os << "\n";
            }
            break;
        }
        case Format::latex: {
            os << "% " << report.command;
            for (const auto& [k, v] : report.params) os << " " << k << "=" << v;
            os << "\n\\begin{tabular}{rlll}\n";
            std::string idx = report.rows.empty() ? "index" : report.rows.front().index_name;
            os << "$" << idx << "$ & exact & decimal & provenance \\\\\n\\hline\n";
            for (const auto& r : report.rows)
                os << r.index << " & $" << (r.exact ? pi_latex(*r.exact) : std::string("-")) << "$ & " << decimal_text(r, digits) << " & "
                   << r.provenance << " \\\\\n";
            os << "\\end{tabular}\n";
            break;
        }
        case Format::json: {
            nlohmann::ordered_json j;
            j["command"] = report.command;
            nlohmann::ordered_json params = nlohmann::ordered_json::object();
            for (const auto& [k, v] : report.params) params[k] = v;
            j["parameters"] = params;
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto& r : report.rows) {
                nlohmann::ordered_json row;
                row[r.index_name] = r.index;
                if (r.exact) {
                    row["exact"] = pi_to_json(*r.exact);
                    row["text"] = r.exact->to_string();
                } else {
                    row["exact"] = nullptr;
                }
                row["decimal"] = decimal_text(r, digits);
                row["abs_error"] = r.abs_error;
                row["provenance"] = r.provenance;
                for (const auto& [k, v] : r.extra) row[k] = v;
                rows.push_back(row);
            }
            j["rows"] = rows;
            if (opt.timing_ms) j["timing_ms"] = *opt.timing_ms;
            os << j.dump(2) << "\n";
            break;
        }
    }
    return os.str();
}

BetaArg parse_beta(const std::string& text) {
    static const std::regex frac(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*)");
    std::smatch m;
    BetaArg b;
    if (std::regex_match(text, m, frac)) {
        Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
        if (den == 0) throw DomainError("zero denominator in beta");
        Rational q(Integer(m[1].str()), den);
        q.canonicalize();
        b.value = q.get_d();
        Rational twice = q * 2;
        if (twice.get_den() == 1 && twice.get_num().fits_slong_p()) {
            b.exact = true;
            b.twice_beta = twice.get_num().get_si();
        } else {
            b.notice = "beta = " + q.get_str() + " is not a half-integer; using the numeric path";
        }
        return b;
    }
    try {
        size_t used = 0;
        b.value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw DomainError("cannot read beta '" + text + "'");
    }
    if (!std::isfinite(b.value)) throw DomainError("beta must be finite");
    b.notice = "decimal beta " + text + " given; using the numeric path";
    return b;
}

}  // namespace aw::cli
