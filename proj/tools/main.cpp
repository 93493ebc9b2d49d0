#include "angleworks/angles.hpp"
#include "angleworks/polytope.hpp"
#include "angleworks/verify.hpp"
#include "format.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <regex>

using namespace aw;
using aw::cli::Record;
using aw::cli::Report;

namespace {

struct Common {
    std::string format = "plain";
    std::optional<int> digits;
    bool timing = false;
};

Record angle_record(const AngleEntry& e, int k) {
    Record r;
    r.index_name = "k";
    r.index = k;
    if (e.exact) r.exact = e.value;
    r.value = e.numeric;
    r.abs_error = e.abs_error;
    r.provenance = to_string(e.provenance);
    return r;
}

Record face_record(const FaceEntry& e, int l) {
    Record r;
    r.index_name = "l";
    r.index = l;
    if (e.exact) r.exact = e.value;
    r.value = e.numeric;
    r.abs_error = e.abs_error;
    r.provenance = to_string(e.provenance);
    return r;
}

std::string beta_text(const cli::BetaArg& b, const std::string& raw) {
    if (!b.exact) return raw;
    return rat(b.twice_beta, 2).get_str();
}

int emit(const Report& rep, const Common& c, double ms) {
    cli::RenderOptions opt;
    opt.format = cli::parse_format(c.format);
    opt.digits = c.digits;
    if (c.timing) opt.timing_ms = ms;
    std::cout << cli::render(rep, opt);
    if (c.timing && opt.format != cli::Format::json) std::cerr << "timing: " << ms << " ms\n";
    return 0;
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "plain, csv, latex or json")->check(CLI::IsMember({"plain", "csv", "latex", "json"}));
    sub->add_option("--digits", c.digits, "decimal places")->check(CLI::Range(1, kMaxDecimalDigits));
    sub->add_flag("--timing", c.timing, "report wall time");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expected angle sums of beta and beta' simplices and f-vectors of random polytopes"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Common common;

    auto* angles = app.add_subcommand("angles", "internal angle sums J_{n,k}(beta) or J~_{n,k}(beta)");
    std::string family, beta_raw;
    int n = 0;
    std::optional<int> k;
    bool numeric = false;
    angles->add_option("--family", family)->required()->check(CLI::IsMember({"beta", "betaprime"}));
    angles->add_option("--n", n)->required();
    angles->add_option("--k", k);
    angles->add_option("--beta", beta_raw, "P/Q")->required();
    angles->add_flag("--numeric", numeric, "skip the exact engine");
    add_common(angles, common);

    auto* fvec = app.add_subcommand("fvector", "expected f-vector of a random polytope");
    std::string model, alpha_raw, fbeta_raw;
    int d = 0;
    std::optional<int> fn;
    fvec->add_option("--model", model)->required()->check(CLI::IsMember({"voronoi", "zerocell", "poisson", "beta", "betaprime"}));
    fvec->add_option("--d", d)->required();
    fvec->add_option("--alpha", alpha_raw);
    fvec->add_option("--beta", fbeta_raw, "P/Q");
    fvec->add_option("--n", fn);
    add_common(fvec, common);

    auto* reitz = app.add_subcommand("reitzner", "Reitzner constants C_{d,k} (ball) and C*_{d,k} (sphere)");
    std::string surface;
    int rd = 0;
    std::optional<int> rk;
    reitz->add_option("--surface", surface)->required()->check(CLI::IsMember({"ball", "sphere"}));
    reitz->add_option("--d", rd)->required();
    reitz->add_option("--k", rk);
    add_common(reitz, common);

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    std::string suite;
    VerifyOptions vopt;
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"relations", "crosscheck", "montecarlo", "all"}));
    verify->add_option("--seed", vopt.seed);
    verify->add_option("--trials", vopt.trials)->check(CLI::PositiveNumber);
    verify->add_option("--max-n", vopt.max_n)->check(CLI::Range(1, 12));
    verify->add_flag("--timing", common.timing);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        if (*angles) {
            if (n < 1) throw DomainError("--n must be positive");
            if (k && (*k < 1 || *k > n)) throw DomainError("--k must lie in 1..n");
            Family fam = family == "beta" ? Family::beta : Family::betaprime;
            auto b = cli::parse_beta(beta_raw);
            if (!b.notice.empty()) std::cerr << "note: " << b.notice << "\n";
            AngleTable t;
            if (b.exact && !numeric)
                t = fam == Family::beta ? bJ_table(n, b.twice_beta) : bJtilde_table(n, b.twice_beta);
            else
                t = numeric_table(fam, n, b.value);
            Report rep{"angles", {{"family", family}, {"n", std::to_string(n)}, {"beta", beta_text(b, beta_raw)}}, {}};
            for (int j = 1; j <= n; ++j)
                if (!k || *k == j) rep.rows.push_back(angle_record(t.at(j), j));
            return emit(rep, common, since(t0));
        }
        if (*fvec) {
            if (d < 1) throw DomainError("--d must be positive");
            FVector f;
            Report rep{"fvector", {{"model", model}, {"d", std::to_string(d)}}, {}};
            if (model == "voronoi" || model == "zerocell") {
                if (!alpha_raw.empty() || !fbeta_raw.empty() || fn) throw DomainError(model + " takes only --d");
                f = model == "voronoi" ? typical_voronoi_fvector(d) : zero_cell_fvector(d);
            } else if (model == "poisson") {
                if (alpha_raw.empty()) throw DomainError("poisson needs --alpha");
                if (!fbeta_raw.empty() || fn) throw DomainError("poisson takes --alpha, not --beta/--n");
                static const std::regex integer(R"(\s*\+?\d+\s*)");
                if (std::regex_match(alpha_raw, integer)) {
                    int a = std::stoi(alpha_raw);
                    if (a < 1) throw DomainError("alpha must be positive");
                    f = poisson_polytope_fvector(d, a);
                } else {
                    double a = 0;
                    try {
                        a = std::stod(alpha_raw);
                    } catch (const std::exception&) {
                        throw DomainError("cannot read alpha '" + alpha_raw + "'");
                    }
                    if (!(a > 0)) throw DomainError("alpha must be positive");
                    std::cerr << "note: non-integer alpha; using the numeric path\n";
                    f = poisson_polytope_numeric(d, a);
                }
                rep.params.emplace_back("alpha", alpha_raw);
            } else {
                if (fbeta_raw.empty() || !fn) throw DomainError(model + " needs --beta and --n");
                if (!alpha_raw.empty()) throw DomainError(model + " takes --beta, not --alpha");
                auto b = cli::parse_beta(fbeta_raw);
                if (!b.notice.empty()) std::cerr << "note: " << b.notice << "\n";
                bool prime = model == "betaprime";
                if (b.exact)
                    f = prime ? betaprime_polytope_fvector(*fn, d, b.twice_beta) : beta_polytope_fvector(*fn, d, b.twice_beta);
                else
                    f = prime ? betaprime_polytope_numeric(*fn, d, b.value) : beta_polytope_numeric(*fn, d, b.value);
                rep.params.emplace_back("n", std::to_string(*fn));
                rep.params.emplace_back("beta", beta_text(b, fbeta_raw));
            }
            for (int l = 0; l < d; ++l) rep.rows.push_back(face_record(f.at(l), l));
            return emit(rep, common, since(t0));
        }
        if (*reitz) {
            if (rd < 2) throw DomainError("--d must be at least 2");
            if (rk && (*rk < 0 || *rk >= rd)) throw DomainError("--k must lie in 0..d-1");
            bool sphere = surface == "sphere";
            int digits = common.digits.value_or(20);
            Report rep{"reitzner", {{"surface", surface}, {"d", std::to_string(rd)}}, {}};
            for (int j = 0; j < rd; ++j) {
                if (rk && *rk != j) continue;
                auto c = sphere ? reitzner_sphere(rd, j, digits) : reitzner_ball(rd, j, digits);
                Record r;
                r.index_name = "k";
                r.index = j;
                r.exact = c.exact;
                r.value = c.value;
                r.decimal = c.decimal;
                r.provenance = c.exact ? "closed" : "numeric";
                r.extra.emplace_back("angle", c.angle.to_string());
                rep.rows.push_back(r);
            }
            return emit(rep, common, since(t0));
        }
        if (*verify) {
            std::vector<std::string> suites =
                suite == "all" ? std::vector<std::string>{"relations", "crosscheck", "montecarlo"} : std::vector<std::string>{suite};
            int total = 0, failed = 0;
            for (const auto& s : suites)
                for (const auto& r : run_suite(s, vopt)) {
                    ++total;
                    failed += !r.passed;
                    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
                    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
                    std::cout << "\n";
                }
            std::cout << "summary: " << total << " checks, " << failed << " failed\n";
            if (common.timing) std::cerr << "timing: " << since(t0) << " ms\n";
            return failed == 0 ? 0 : 1;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
