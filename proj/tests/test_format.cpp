#include "format.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace aw;
using namespace aw::cli;

namespace {

Report sample() {
    Report r{"angles", {{"family", "beta"}, {"n", "5"}, {"beta", "-1"}}, {}};
    Record a;
    a.index_name = "k";
    a.index = 1;
    a.exact = PiNumber(rat(539, 288), -4) - PiNumber(rat(1, 6));
    a.value = a.exact->to_double();
    a.provenance = "fill";
    r.rows.push_back(a);
    Record b = a;
    b.index = 2;
    b.exact.reset();
    b.value = 0.25;
    b.abs_error = 1e-12;
    b.provenance = "numeric";
    r.rows.push_back(b);
    return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
    return out;
}

}  // namespace

TEST_CASE("json form of PiNumbers") {
    PiNumber x = PiNumber(rat(-7, 3), 1) + PiNumber(rat(5, 2), -4) + PiNumber(11);
    auto j = pi_to_json(x);
    CHECK(j.is_array());
    CHECK(j.size() == 3);
    for (const auto& t : j) {
        CHECK(t.at("half_exp").is_number_integer());
        CHECK(t.at("num").is_string());
        CHECK(t.at("den").is_string());
    }
    CHECK(pi_from_json(j) == x);
    CHECK(pi_from_json(nlohmann::json::parse(j.dump())) == x);
}

TEST_CASE("json report layout") {
    auto j = nlohmann::json::parse(render(sample(), {Format::json, 12, std::nullopt}));
    CHECK(j.at("command") == "angles");
    CHECK(j.at("parameters").at("n") == "5");
    CHECK(j.at("rows").size() == 2);
    CHECK(pi_from_json(j.at("rows")[0].at("exact")) == *sample().rows[0].exact);
    CHECK(j.at("rows")[0].at("text") == "539/288 * pi^-2 - 1/6");
    CHECK(j.at("rows")[1].at("exact").is_null());
    CHECK(j.at("rows")[0].at("decimal") == "0.022958742997");
    CHECK_FALSE(j.contains("timing_ms"));
    auto t = nlohmann::json::parse(render(sample(), {Format::json, 12, 1.5}));
    CHECK(t.at("timing_ms") == 1.5);
}

TEST_CASE("plain output") {
    CHECK(render(sample(), {Format::plain, std::nullopt, std::nullopt}) == "539/288 * pi^-2 - 1/6, 0.250000000000000\n");
    std::string table = render(sample(), {Format::plain, 6, std::nullopt});
    CHECK(table.find("k=1  539/288 * pi^-2 - 1/6  0.022959  fill") != std::string::npos);
}

TEST_CASE("csv and latex carry the same decimals") {
    std::string csv = render(sample(), {Format::csv, 20, std::nullopt});
    std::string tex = render(sample(), {Format::latex, 20, std::nullopt});
    auto lines = split(csv, '\n');
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "family,n,beta,k,exact,decimal,abs_error,provenance");
    for (int i = 1; i <= 2; ++i) {
        auto cols = split(lines[i], ',');
        std::string dec = cols[5];
        CHECK(dec == decimal_text(sample().rows[i - 1], 20));
        CHECK(tex.find(" & " + dec + " & ") != std::string::npos);
    }
    CHECK(tex.find("\\frac{539}{288}\\pi^{-2} - \\frac{1}{6}") != std::string::npos);
}

TEST_CASE("latex form") {
    CHECK(pi_latex(PiNumber(2) + PiNumber(rat(48, 35), 4)) == "2 + \\frac{48}{35}\\pi^{2}");
    CHECK(pi_latex(PiNumber(1, 2)) == "\\pi");
    CHECK(pi_latex(PiNumber(rat(-3, 4), 1)) == "-\\frac{3}{4}\\pi^{1/2}");
}

TEST_CASE("beta arguments") {
    auto a = parse_beta("5/2");
    CHECK(a.exact);
    CHECK(a.twice_beta == 5);
    CHECK(a.notice.empty());
    auto b = parse_beta("-1");
    CHECK(b.exact);
    CHECK(b.twice_beta == -2);
    auto c = parse_beta("1/3");
    CHECK_FALSE(c.exact);
    CHECK(c.value == doctest::Approx(1.0 / 3));
    CHECK_FALSE(c.notice.empty());
    auto d = parse_beta("0.5");
    CHECK_FALSE(d.exact);
    CHECK(d.value == 0.5);
    CHECK_FALSE(d.notice.empty());
    auto e = parse_beta("4/8");
    CHECK(e.exact);
    CHECK(e.twice_beta == 1);
    CHECK_THROWS_AS(parse_beta("abc"), DomainError);
    CHECK_THROWS_AS(parse_beta("1/0"), DomainError);
}
