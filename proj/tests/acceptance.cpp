// One line per acceptance criterion; exit status 1 if any fails.
#include "angleworks/angles.hpp"
#include "angleworks/polytope.hpp"
#include "angleworks/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace aw;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << what << " -- " << detail << std::endl;
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Every suite check whose name starts with one of the prefixes.
std::pair<int, int> tally(const std::vector<CheckResult>& rs, const std::vector<std::string>& prefixes, std::string& first_bad) {
    int n = 0, bad = 0;
    for (const auto& r : rs)
        for (const auto& p : prefixes)
            if (r.name.rfind(p, 0) == 0) {
                ++n;
                if (!r.passed) {
                    ++bad;
                    if (first_bad.empty()) first_bad = r.name + ": " + r.detail;
                }
                break;
            }
    return {n, bad};
}

std::string summary(int n, int bad, const std::string& first_bad) {
    std::ostringstream os;
    os << n << " checks, " << bad << " failed";
    if (bad) os << "; first: " << first_bad;
    return os.str();
}

}  // namespace

int main() {
    std::cout.precision(4);

    {
        struct G {
            int n, k;
            long tb;
            PiNumber want;
        };
        std::vector<G> gs = {
            {4, 1, -2, PiNumber(rat(1, 8))},
            {5, 1, -2, PiNumber(rat(539, 288), -4) - PiNumber(rat(1, 6))},
            {4, 1, 0, PiNumber(rat(401, 2560))},
            {5, 1, 0, PiNumber(rat(1692197, 846720), -4) - PiNumber(rat(1, 6))},
        };
        bool ok = true;
        double worst = 0;
        for (const auto& g : gs) {
            auto t0 = Clock::now();
            PiNumber v = bJ_exact(g.n, g.k, g.tb);
            double s = seconds_since(t0);
            worst = std::max(worst, s);
            ok = ok && v == g.want && s < 1.0;
        }
        std::ostringstream d;
        d << "4 values, slowest " << worst << " s";
        report(1, "golden exact angle sums", ok, d.str());
    }

    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string bad;
        std::vector<FVector> tables;
        for (int d = 1; d <= 10; ++d) tables.push_back(typical_voronoi_fvector(d));
        double s = seconds_since(t0);
        auto val = [&](int d, int l) { return tables[d - 1].at(l).value; };
        PiNumber pi2 = PiNumber::pi(4);
        ok = val(2, 0) == PiNumber(6) && val(2, 1) == PiNumber(6);
        ok = ok && val(3, 0) == pi2 * rat(96, 35) && val(3, 1) == pi2 * rat(144, 35) && val(3, 2) == PiNumber(2) + pi2 * rat(48, 35);
        if (!ok) bad = "d=2 or d=3 values differ";
        for (int d = 1; d <= 10; ++d)
            for (int l = 0; l < d; ++l) {
                bool form = support_within(val(d, l), voronoi_form(d, l)) && (d % 2 == 1 || val(d, l).is_rational());
                if (!form && bad.empty()) bad = "form fails at d=" + std::to_string(d) + " l=" + std::to_string(l);
                ok = ok && form;
            }
        ok = ok && s < 60;
        std::ostringstream d;
        d << "tables d<=10 in " << s << " s" << (bad.empty() ? "" : "; " + bad);
        report(2, "typical Voronoi cell values and arithmetic forms", ok, d.str());
    }

    VerifyOptions opt;
    opt.max_n = 10;
    auto cross = crosscheck_suite(opt);

    {
        std::string bad;
        auto [n, b] = tally(cross, {"zero cell:"}, bad);
        report(3, "zero cell: two formulas, E f_0(Z_2), combinatorial identity (d<=12)", n >= 3 && b == 0, summary(n, b, bad));
    }
    {
        std::string bad;
        auto [n, b] = tally(cross, {"alpha = 2", "residue of sin"}, bad);
        report(4, "alpha = 2 binomials and the residue identity (d<=10)", n == 2 && b == 0, summary(n, b, bad));
    }
    {
        auto t0 = Clock::now();
        auto rel = relations_suite(opt);
        std::string bad;
        auto [n, b] = tally(rel, {"poincare", "inversion", "euler"}, bad);
        auto [nk, bk] = tally(rel, {"kronecker"}, bad);
        std::ostringstream d;
        d << summary(n, b, bad) << "; kronecker " << nk - bk << "/" << nk << "; " << seconds_since(t0) << " s";
        report(5, "Poincare (n<=10), inversion (n<=8, alpha<=8), Euler and Dehn-Sommerville (d<=10)", n > 0 && b == 0 && bk == 0, d.str());
    }
    {
        std::string bad;
        auto [n, b] = tally(cross, {"rational functions", "polynomials"}, bad);
        report(6, "R_m(n) and P_{alpha,k}(n) pointwise", n == 2 && b == 0, summary(n, b, bad));
    }

    {
        bool ok = true;
        double worst_err = 0, worst_time = 0;
        for (const auto& c : numeric_grid()) {
            bool tilde = c.family == Family::betaprime;
            auto t0 = Clock::now();
            double q = (tilde ? bJtilde_numeric(c.n, c.k, c.twice_beta / 2.0) : bJ_numeric(c.n, c.k, c.twice_beta / 2.0)).value;
            worst_time = std::max(worst_time, seconds_since(t0));
            double x = (tilde ? bJtilde_exact(c.n, c.k, c.twice_beta) : bJ_exact(c.n, c.k, c.twice_beta)).to_double();
            worst_err = std::max(worst_err, std::abs(q - x));
        }
        ok = worst_err <= 1e-8 && worst_time < 5 && numeric_grid().size() == 30;
        std::ostringstream d;
        d << "30 cases, max error " << worst_err << ", slowest " << worst_time << " s";
        report(7, "numeric against exact on the fixed grid", ok, d.str());
    }

    {
        bool ok = true;
        std::string bad;
        for (int d = 2; d <= 8; ++d)
            if (*reitzner_sphere(d, 0).exact != PiNumber(1)) {
                ok = false;
                bad = "C*_{" + std::to_string(d) + ",0}";
            }
        double worst = 0;
        for (int d = 3; d <= 8; ++d) {
            double a = reitzner_ball(d, d - 2).value, b = reitzner_ball(d, d - 1).value;
            double sa = reitzner_sphere(d, d - 2).value, sb = reitzner_sphere(d, d - 1).value;
            worst = std::max({worst, std::abs(a - d * b / 2) / a, std::abs(sa - d * sb / 2) / sa});
        }
        ok = ok && worst <= 1e-10;
        std::ostringstream d;
        d << "C*_{d,0} = 1 for d=2..8" << (bad.empty() ? "" : " fails at " + bad) << "; worst relative ridge error " << worst;
        report(8, "Reitzner constants", ok, d.str());
    }

    {
        VerifyOptions mc;
        mc.seed = 42;
        mc.trials = 20000;
        auto t0 = Clock::now();
        auto rs = montecarlo_suite(mc);
        double s = seconds_since(t0);
        std::string bad;
        auto [n, b] = tally(rs, {"mc "}, bad);
        std::string bad_ks;
        auto [nk, bk] = tally(rs, {"ks ", "sphere"}, bad_ks);
        std::ostringstream d;
        d << summary(n, b, bad) << "; radial laws " << nk - bk << "/" << nk << "; " << s << " s for the whole suite";
        report(9, "Monte Carlo agreement within 4 standard errors", b == 0 && bk == 0 && s < 120, d.str());
    }

    std::cout << "INFO [10] asymptotic limits are not checked as limits; covered by the constant-level checks above" << std::endl;
    return failures == 0 ? 0 : 1;
}
