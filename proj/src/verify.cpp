#include "angleworks/verify.hpp"

#include "angleworks/angles.hpp"
#include "angleworks/montecarlo.hpp"
#include "angleworks/series.hpp"
#include "angleworks/trig.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace aw {

namespace {

CheckResult result(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok, std::move(detail)};
}

std::string str(const std::function<void(std::ostringstream&)>& f) {
    std::ostringstream os;
    os.precision(12);
    f(os);
    return os.str();
}

// One line per group: passes when every item passes, names the first failure.
class Group {
public:
    explicit Group(std::string name) : name_(std::move(name)) {}
    void item(bool ok, const std::string& what) {
        ++count_;
        if (!ok && first_bad_.empty()) first_bad_ = what;
        if (!ok) ++bad_;
    }
    void error(const std::string& what, const std::exception& e) { item(false, what + ": " + e.what()); }
    CheckResult done() const {
        if (bad_ == 0) return result(name_, true, str([&](auto& os) { os << count_ << " cases"; }));
        return result(name_, false, str([&](auto& os) { os << bad_ << "/" << count_ << " failed, first " << first_bad_; }));
    }

private:
    std::string name_;
    int count_ = 0;
    int bad_ = 0;
    std::string first_bad_;
};

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

std::vector<int> range_step(int from, int to, int step) {
    std::vector<int> v;
    for (int i = from; step > 0 ? i <= to : i >= to; i += step) v.push_back(i);
    return v;
}

}  // namespace

std::vector<GridCase> numeric_grid() {
    return {
        {Family::beta, 4, 1, -2},      {Family::beta, 4, 2, -2},      {Family::beta, 4, 1, 0},
        {Family::beta, 4, 2, 0},       {Family::beta, 5, 1, -2},      {Family::beta, 5, 2, -2},
        {Family::beta, 5, 3, -2},      {Family::beta, 5, 1, 0},       {Family::beta, 5, 2, 0},
        {Family::beta, 5, 3, 0},       {Family::beta, 5, 1, -1},      {Family::beta, 5, 2, 1},
        {Family::beta, 6, 1, -1},      {Family::beta, 6, 2, 0},       {Family::beta, 6, 3, -2},
        {Family::beta, 6, 4, 1},       {Family::beta, 7, 1, -2},      {Family::beta, 7, 2, 0},
        {Family::beta, 7, 3, -1},      {Family::beta, 7, 5, 2},       {Family::beta, 6, 1, 2},
        {Family::beta, 7, 1, 1},       {Family::betaprime, 3, 1, 3},  {Family::betaprime, 4, 1, 4},
        {Family::betaprime, 4, 2, 5},  {Family::betaprime, 4, 3, 6},  {Family::betaprime, 5, 1, 5},
        {Family::betaprime, 5, 2, 6},  {Family::betaprime, 6, 3, 7},  {Family::betaprime, 7, 2, 8},
    };
}

bool support_within(const PiNumber& x, const std::vector<int>& allowed) {
    for (const auto& [e, q] : x.terms())
        if (std::find(allowed.begin(), allowed.end(), e) == allowed.end()) return false;
    return true;
}

std::vector<int> bJ_form(int n, int k, long twice_beta) {
    long s = twice_beta + n;
    if (s % 2 == 0) return {0};
    if ((n - k) % 2 == 1) return {-2 * (n - k - 1)};
    return range_step(0, -2 * (n - k), -4);
}

std::vector<int> bJtilde_form(int n, int k, long twice_beta) {
    long s = twice_beta - n;
    if (s % 2 != 0) return {0};
    int top = (n - k) % 2 == 0 ? n - k : n - k - 1;
    if (k % 2 == 0) return {-2 * top};
    return range_step(0, -2 * top, -4);
}

std::vector<int> voronoi_form(int d, int l) {
    if (d % 2 == 0) return {0};
    if (l % 2 == 1) return {2 * (d - l)};
    return range_step(2 * (d - 1), 2 * (d - l - 1), -4);
}

std::vector<int> beta_polytope_form(Family family, int n, int d, int k, long twice_beta) {
    long a = family == Family::beta ? twice_beta + d : twice_beta - d;
    bool rational = family == Family::beta ? a % 2 != 0 : a % 2 == 0;
    if (rational) return {0};
    return range_step(0, -4 * ((n - k) / 2), -4);
}

CheckResult check_poincare(Family family, int n, long twice_beta) {
    std::string name = str([&](auto& os) {
        os << "poincare " << (family == Family::beta ? "J" : "J~") << " n=" << n << " 2beta=" << twice_beta;
    });
    try {
        AngleTable t = family == Family::beta ? bJ_table(n, twice_beta) : bJtilde_table(n, twice_beta);
        std::vector<PiNumber> z{PiNumber()};
        for (int k = 1; k <= n; ++k) z.push_back(t.at(k).value);
        // a single point has no relation beyond z_1 = 1
        for (int m = 0; n >= 2 && m <= n; ++m) {
            PiNumber acc;
            for (int k = m; k <= n; ++k) {
                PiNumber term = z[k] * Rational(binomial(k, m));
                if (k % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            PiNumber rhs = n % 2 == 0 ? z[m] : -z[m];
            if (acc != rhs) return result(name, false, str([&](auto& os) { os << "fails at m=" << m; }));
        }
        if (z[n] != PiNumber(1)) return result(name, false, "z_n != 1");
        if (family == Family::beta && n >= 2 && z[n - 1] != PiNumber(rat(n, 2)))
            return result(name, false, "z_{n-1} != n/2");
        for (int k = 1; k <= n; ++k) {
            auto form = family == Family::beta ? bJ_form(n, k, twice_beta) : bJtilde_form(n, k, twice_beta);
            if (!support_within(z[k], form))
                return result(name, false, str([&](auto& os) { os << "arithmetic form fails at k=" << k; }));
        }
        return result(name, true);
    } catch (const std::exception& e) {
        return result(name, false, e.what());
    }
}

CheckResult check_inversion(Family family, int n, int alpha) {
    bool tilde = family == Family::betaprime;
    std::string name = str([&](auto& os) { os << "inversion " << (tilde ? "I~J~" : "IJ") << " n=" << n << " alpha=" << alpha; });
    try {
        std::vector<PiNumber> ext(static_cast<size_t>(n) + 1);
        std::vector<AngleTable> tab(static_cast<size_t>(n) + 1);
        for (int m = 1; m <= n; ++m) {
            ext[m] = tilde ? external_bI_tilde(n, m, alpha) : external_bI(n, m, alpha);
            tab[m] = tilde ? bJtilde_table(m, alpha + m - 1) : bJ_table(m, alpha - m + 1);
        }
        if (ext[n] != PiNumber(1)) return result(name, false, "I_{n,n} != 1");
        for (int k = 1; k < n; ++k) {
            PiNumber acc;
            for (int m = k; m <= n; ++m) {
                PiNumber t = ext[m] * tab[m].at(k).value;
                if (m % 2 == 0)
                    acc += t;
                else
                    acc -= t;
            }
            if (!acc.is_zero()) return result(name, false, str([&](auto& os) { os << "nonzero sum at k=" << k; }));
        }
        return result(name, true);
    } catch (const std::exception& e) {
        return result(name, false, e.what());
    }
}

CheckResult check_kronecker(int n, int alpha) {
    std::string name = str([&](auto& os) { os << "kronecker n=" << n << " alpha=" << alpha; });
    try {
        PiNumber two_alpha_f0 = PiNumber(Rational(alpha)) / c_beta(alpha - 1);
        int exact_rows = 0, mixed_rows = 0;
        for (int k = 1; k <= n; ++k) {
            PiNumber target_u = two_alpha_f0.pow(n - k) / Rational(factorial(n - k));
            // a-values by residue where the parity allows, otherwise by quadrature
            PiNumber s, u;
            double sn = 0, un = 0;
            bool exact = true;
            for (int m = k; m <= n; ++m) {
                PiNumber b = external_lB(Rational(n), Rational(m), alpha) * (Rational(m) + rat(1, alpha));
                long kappa = static_cast<long>(alpha) * k + 2;
                double t;
                if ((kappa + (m - k)) % 2 == 1) {
                    PiNumber e = b * lA_residue(static_cast<long>(alpha) * m + 2, kappa, alpha);
                    s += (m - k) % 2 == 0 ? e : -e;
                    u += e;
                    t = e.to_double();
                } else {
                    exact = false;
                    t = b.to_double() * lA_numeric(m + 2.0 / alpha, k + 2.0 / alpha, alpha, Family::beta).value;
                }
                sn += (m - k) % 2 == 0 ? t : -t;
                un += t;
            }
            if (exact) {
                if (s != PiNumber(n == k ? 1 : 0)) return result(name, false, str([&](auto& os) { os << "signed sum at k=" << k; }));
                if (u != target_u) return result(name, false, str([&](auto& os) { os << "unsigned sum at k=" << k; }));
                ++exact_rows;
            } else {
                double tu = target_u.to_double();
                if (std::abs(sn - (n == k ? 1.0 : 0.0)) > 1e-9 * std::max(1.0, tu) || !rel_close(un, tu, 1e-9))
                    return result(name, false, str([&](auto& os) { os << "sums at k=" << k << ": " << sn << ", " << un; }));
                ++mixed_rows;
            }
        }
        return result(name, true, str([&](auto& os) { os << exact_rows << " exact rows, " << mixed_rows << " with quadrature"; }));
    } catch (const std::exception& e) {
        return result(name, false, e.what());
    }
}

CheckResult check_kronecker_tilde(int n, int alpha) {
    std::string name = str([&](auto& os) { os << "kronecker~ n=" << n << " alpha=" << alpha; });
    try {
        int rows = 0;
        for (int k = 1; k <= n; ++k) {
            if (alpha * k <= 1 || (alpha * k) % 2 != 0) continue;
            PiNumber s;
            for (int m = k; m <= n; ++m) {
                PiNumber e = external_lB_tilde(Rational(n), Rational(m), alpha) * (Rational(m) - rat(1, alpha)) *
                             lA_tilde_residue(static_cast<long>(alpha) * m - 2, static_cast<long>(alpha) * k - 2, alpha);
                s += (m - k) % 2 == 0 ? e : -e;
            }
            if (s != PiNumber(n == k ? 1 : 0)) return result(name, false, str([&](auto& os) { os << "signed sum at k=" << k; }));
            ++rows;
        }
        return result(name, true, str([&](auto& os) { os << rows << " exact rows"; }));
    } catch (const std::exception& e) {
        return result(name, false, e.what());
    }
}

CheckResult check_fvector_relations(const std::string& label, const FVector& f) {
    try {
        if (!euler_holds(f)) return result(label, false, "Euler relation fails");
        bool simple = f.model == Model::zerocell || f.model == Model::voronoi;
        auto z = simple ? dual_face_vector(f) : f.with_empty_face();
        if (!dehn_sommerville_holds(z)) return result(label, false, "Dehn-Sommerville fails");
        for (const auto& e : f.entries)
            if (!(e.numeric > 0)) return result(label, false, "nonpositive entry");
        return result(label, true);
    } catch (const std::exception& e) {
        return result(label, false, e.what());
    }
}

std::vector<CheckResult> relations_suite(const VerifyOptions& opt) {
    int N = std::max(1, opt.max_n);
    std::vector<CheckResult> out;
    for (int n = 1; n <= N; ++n) {
        Group g(str([&](auto& os) { os << "poincare J n=" << n << " beta=-1..3"; }));
        for (long tb = -2; tb <= 6; ++tb) {
            auto r = check_poincare(Family::beta, n, tb);
            g.item(r.passed, r.name + " " + r.detail);
        }
        out.push_back(g.done());
        Group h(str([&](auto& os) { os << "poincare J~ n=" << n << " alpha=1..6"; }));
        for (int a = 1; a <= 6; ++a) {
            auto r = check_poincare(Family::betaprime, n, a + n - 1);
            h.item(r.passed, r.name + " " + r.detail);
        }
        out.push_back(h.done());
    }
    for (int n = 2; n <= std::min(N, 8); ++n) {
        Group g(str([&](auto& os) { os << "inversion IJ n=" << n << " alpha<=8"; }));
        for (int a = std::max(0, n - 3); a <= 8; ++a) {
            auto r = check_inversion(Family::beta, n, a);
            g.item(r.passed, r.name + " " + r.detail);
        }
        out.push_back(g.done());
        Group h(str([&](auto& os) { os << "inversion I~J~ n=" << n << " alpha<=8"; }));
        for (int a = 1; a <= 8; ++a) {
            auto r = check_inversion(Family::betaprime, n, a);
            h.item(r.passed, r.name + " " + r.detail);
        }
        out.push_back(h.done());
    }
    for (int a = 1; a <= 4; ++a)
        for (int n = 1; n <= std::min(N, 6); ++n) {
            out.push_back(check_kronecker(n, a));
            out.push_back(check_kronecker_tilde(n, a));
        }
    for (int d = 1; d <= std::min(N, 10); ++d) {
        Group g(str([&](auto& os) { os << "euler/dehn-sommerville d=" << d; }));
        auto add = [&](const std::string& label, const std::function<FVector()>& make) {
            try {
                auto r = check_fvector_relations(label, make());
                g.item(r.passed, label + " " + r.detail);
            } catch (const std::exception& e) {
                g.error(label, e);
            }
        };
        add("zerocell", [&] { return zero_cell_fvector(d); });
        add("voronoi", [&] { return typical_voronoi_fvector(d); });
        for (int a = 1; a <= 3; ++a) add("poisson alpha=" + std::to_string(a), [&] { return poisson_polytope_fvector(d, a); });
        for (int extra = 1; extra <= 2; ++extra) {
            for (long tb : {-2L, 0L, 1L})
                if (tb + d >= 0) add("beta", [&] { return beta_polytope_fvector(d + extra, d, tb); });
            for (long tb : {static_cast<long>(d) + 1, static_cast<long>(d) + 2})
                add("betaprime", [&] { return betaprime_polytope_fvector(d + extra, d, tb); });
        }
        out.push_back(g.done());
    }
    return out;
}

std::vector<CheckResult> crosscheck_suite(const VerifyOptions& opt) {
    int N = std::max(3, opt.max_n);
    std::vector<CheckResult> out;
    auto guarded = [&](const std::string& name, const std::function<CheckResult()>& f) {
        try {
            out.push_back(f());
        } catch (const std::exception& e) {
            out.push_back(result(name, false, e.what()));
        }
    };

    struct Golden {
        int n, k;
        long tb;
        PiNumber v;
    };
    std::vector<Golden> golden = {
        {4, 1, -2, PiNumber(rat(1, 8))},
        {5, 1, -2, PiNumber(rat(539, 288), -4) + PiNumber(rat(-1, 6))},
        {4, 1, 0, PiNumber(rat(401, 2560))},
        {5, 1, 0, PiNumber(rat(1692197, 846720), -4) + PiNumber(rat(-1, 6))},
    };
    for (const auto& g : golden) {
        std::string name = str([&](auto& os) { os << "golden J_{" << g.n << "," << g.k << "}(" << g.tb << "/2)"; });
        guarded(name, [&] {
            PiNumber v = bJ_exact(g.n, g.k, g.tb);
            return result(name, v == g.v, v.to_string());
        });
    }


    for (const auto& c : numeric_grid()) {
        bool tilde = c.family == Family::betaprime;
        std::string name = str([&](auto& os) {
            os << "numeric " << (tilde ? "J~" : "J") << "_{" << c.n << "," << c.k << "}(" << c.twice_beta << "/2)";
        });
        guarded(name, [&] {
            double beta = c.twice_beta / 2.0;
            QuadResult q = tilde ? bJtilde_numeric(c.n, c.k, beta) : bJ_numeric(c.n, c.k, beta);
            double x = (tilde ? bJtilde_exact(c.n, c.k, c.twice_beta) : bJ_exact(c.n, c.k, c.twice_beta)).to_double();
            double err = std::abs(q.value - x);
            return result(name, err <= 1e-8, str([&](auto& os) { os << "error " << err; }));
        });
    }

    {
        Group g("ugly formulas against the tables");
        for (int n = 1; n <= std::min(N, 8); ++n)
            for (int k = 1; k <= n; ++k) {
                std::string w = str([&](auto& os) { os << "n=" << n << " k=" << k; });
                try {
                    if ((n - k) % 2 == 0)
                        for (int a : {2, 4})
                            if (n >= 3 && a >= n - 3) g.item(bJ_ugly(n, k, a) == bJ_exact(n, k, a - n + 1), "J " + w);
                    if (k % 2 == 1)
                        for (int a : {1, 3})
                            if (n > 1) g.item(bJtilde_ugly(n, k, a) == bJtilde_exact(n, k, a + n - 1), "J~ " + w);
                } catch (const std::exception& e) {
                    g.error(w, e);
                }
            }
        out.push_back(g.done());
    }
    {
        Group g("tangent algebra: real part matches, imaginary part vanishes");
        for (int n = 1; n <= std::min(N, 6); ++n)
            for (int a = std::max(1, n - 3) | 1; a <= 7; a += 2) {
                if ((a - n + 1) < -2) continue;
                for (int k = 1; k <= n; ++k) {
                    std::string w = str([&](auto& os) { os << "n=" << n << " k=" << k << " alpha=" << a; });
                    try {
                        auto [re, im] = bJ_tan_algebra(n, k, a);
                        g.item(im.is_zero() && re == bJ_exact(n, k, a - n + 1), w);
                    } catch (const std::exception& e) {
                        g.error(w, e);
                    }
                }
            }
        out.push_back(g.done());
    }

    guarded("rational functions R_0, R_1, R_2 for n = 3..8", [&] {
        for (long n = 3; n <= 8; ++n) {
            Rational r1 = Rational(n * n + n + 2) / Rational(2 * (n + 3));
            Rational r2 = Rational(n * n * n * n * n + 15 * n * n * n * n + 81 * n * n * n + 225 * n * n + 326 * n + 216) /
                          Rational(8 * (n + 5) * (n + 5) * (n + 7));
            if (rm_value(0, n) != 1 || rm_value(1, n) != r1 || rm_value(2, n) != r2)
                return result("rational functions R_0, R_1, R_2 for n = 3..8", false, "n=" + std::to_string(n));
        }
        return result("rational functions R_0, R_1, R_2 for n = 3..8", true);
    });
    guarded("polynomials P_{alpha,k} at n = k..8", [&] {
        struct P {
            int alpha, k;
            std::function<Rational(long)> f;
        };
        std::vector<P> ps = {
            {1, 2, [](long) -> Rational { return Rational(1); }},
            {1, 4, [](long n) -> Rational { return Rational(n - 1) / 6; }},
            {1, 6, [](long n) -> Rational { return Rational(5 * n * n - 8 * n + 3) / 360; }},
            {1, 8, [](long n) -> Rational { return Rational(35 * n * n * n - 63 * n * n + 37 * n - 9) / 45360; }},
            {2, 1, [](long) -> Rational { return Rational(1); }},
            {2, 2, [](long n) -> Rational { return Rational(n) / 4; }},
            {2, 3, [](long n) -> Rational { return Rational(n * (n + 1)) / 32; }},
            {2, 4, [](long n) -> Rational { return Rational(n * (n * n + 3 * n + 2)) / 384; }},
        };
        int count = 0;
        for (const auto& p : ps)
            for (long n = p.k; n <= 8; ++n, ++count) {
                Rational want = p.f(n);
                want.canonicalize();
                if (p_alpha_k_value(p.alpha, p.k, static_cast<int>(n)) != want)
                    return result("polynomials P_{alpha,k} at n = k..8", false,
                                  str([&](auto& os) { os << "P_{" << p.alpha << "," << p.k << "}(" << n << ")"; }));
            }
        return result("polynomials P_{alpha,k} at n = k..8", true, std::to_string(count) + " values");
    });

    int Z = std::max(N, 12);
    {
        Group g("zero cell: product formula equals series formula, d <= " + std::to_string(Z));
        for (int d = 1; d <= Z; ++d)
            for (int l = d % 2; l <= d; l += 2) {
                std::string w = str([&](auto& os) { os << "d=" << d << " l=" << l; });
                try {
                    g.item(zero_cell_product(d, l) == zero_cell_series(d, l), w);
                } catch (const std::exception& e) {
                    g.error(w, e);
                }
            }
        out.push_back(g.done());
    }
    {
        // coefficients of (x / sin x)^(d+1) from a plain reciprocal and repeated products
        Group g("zero cell: combinatorial identity, d <= " + std::to_string(Z));
        int M = Z + 1;
        std::vector<Rational> s(M), inv(M);
        for (int i = 0; i < M; ++i)
            if (i % 2 == 0) s[i] = Rational(i % 4 == 0 ? 1 : -1) / Rational(factorial(i + 1));
        inv[0] = 1;
        for (int i = 1; i < M; ++i) {
            Rational acc;
            for (int j = 1; j <= i; ++j) acc += s[j] * inv[i - j];
            inv[i] = -acc;
        }
        std::vector<Rational> pw(M);
        pw[0] = 1;
        for (int d = 1; d <= Z; ++d) {
            if (d == 1) {
                // (x/sin x)^2
                for (int i = 0; i < M; ++i) {
                    Rational acc;
                    for (int j = 0; j <= i; ++j) acc += inv[j] * inv[i - j];
                    pw[i] = acc;
                }
            } else {
                std::vector<Rational> next(M);
                for (int i = 0; i < M; ++i)
                    for (int j = 0; j <= i; ++j) next[i] += pw[j] * inv[i - j];
                pw = next;
            }
            std::vector<Integer> prod{Integer(1)};
            for (int j = 1; j <= d - 1; ++j) {
                if ((j - d) % 2 == 0) continue;
                prod.push_back(Integer(0));
                for (size_t i = prod.size() - 1; i >= 1; --i) prod[i] += prod[i - 1] * j * j;
            }
            for (int m = 0; m <= d; m += 2) {
                Rational lhs = Rational(factorial(d)) / Rational(factorial(d - m)) * pw[m];
                Rational rhs = static_cast<size_t>(m / 2) < prod.size() ? Rational(prod[m / 2]) : Rational(0);
                g.item(lhs == rhs, str([&](auto& os) { os << "d=" << d << " m=" << m; }));
            }
        }
        out.push_back(g.done());
    }
    guarded("zero cell: E f_0(Z_2) = pi^2/2", [&] {
        auto f = zero_cell_fvector(2);
        return result("zero cell: E f_0(Z_2) = pi^2/2", f.at(0).value == PiNumber(rat(1, 2), 4), f.at(0).value.to_string());
    });
    {
        Group g("zero cell equals the dual Poisson polytope with alpha = 1");
        for (int d = 1; d <= std::min(N, 8); ++d) {
            try {
                auto z = zero_cell_fvector(d);
                auto p = poisson_polytope_fvector(d, 1);
                for (int l = 0; l < d; ++l) g.item(z.at(l).value == p.at(d - l - 1).value, str([&](auto& os) { os << "d=" << d << " l=" << l; }));
            } catch (const std::exception& e) {
                g.error("d=" + std::to_string(d), e);
            }
        }
        out.push_back(g.done());
    }

    {
        Group g("J~_{n,k}(n/2) from zero cells");
        auto zf = [](int d, int l) { return l == d ? PiNumber(1) : zero_cell_fvector(d).at(l).value; };
        for (int n = 3; n <= std::min(N, 8); ++n)
            for (int k = 1; k <= n - 2; ++k) {
                std::string w = str([&](auto& os) { os << "n=" << n << " k=" << k; });
                try {
                    PiNumber j = bJtilde_exact(n, k, n);
                    PiNumber den = PiNumber::pi(2 * n) * c_tilde_beta(n + 1) * Rational(2);
                    g.item(j == (zf(n, n - k) - zf(n - 2, n - k - 2)) * Rational(n) / den, w);
                    if (k != 1) {
                        PiNumber den2 = PiNumber::pi(2 * (n - 2)) * c_tilde_beta(n + 1) * Rational(2 * k * (k - 1));
                        g.item(j == zf(n - 2, n - k) * Rational(n * (n - 1) * (n - 1)) / den2, w + " second form");
                    }
                } catch (const std::exception& e) {
                    g.error(w, e);
                }
            }
        out.push_back(g.done());
    }

    int T = std::max(N, 10);
    {
        Group g("alpha = 2: E f_{k-1} = binom(d,k) binom(d+k,k), d <= " + std::to_string(T));
        for (int d = 1; d <= T; ++d) {
            try {
                auto p = poisson_polytope_fvector(d, 2);
                for (int k = 1; k <= d; ++k)
                    g.item(p.at(k - 1).value == PiNumber(Rational(binomial(d, k) * binomial(d + k, k))),
                           str([&](auto& os) { os << "d=" << d << " k=" << k; }));
            } catch (const std::exception& e) {
                g.error("d=" + std::to_string(d), e);
            }
        }
        out.push_back(g.done());
    }
    {
        Group g("residue of sin^(-2k-1) cos^(-2d-1) is binom(d+k,k), d <= " + std::to_string(T));
        for (int d = 0; d <= T; ++d)
            for (int k = 0; k <= d; ++k) g.item(sin_cos_residue(d, k) == Rational(binomial(d + k, k)), str([&](auto& os) { os << "d=" << d << " k=" << k; }));
        out.push_back(g.done());
    }
    {
        Group g("Poisson polytope: direct residue equals the angle sum");
        for (int d = 1; d <= std::min(N, 8); ++d)
            for (int a = 1; a <= 4; ++a) {
                try {
                    auto p = poisson_polytope_fvector(d, a);
                    for (int k = 1; k <= d; ++k)
                        if ((a * k) % 2 == 0)
                            g.item(poisson_residue(d, k, a) == p.at(k - 1).value,
                                   str([&](auto& os) { os << "d=" << d << " k=" << k << " alpha=" << a; }));
                } catch (const std::exception& e) {
                    g.error(str([&](auto& os) { os << "d=" << d << " alpha=" << a; }), e);
                }
            }
        out.push_back(g.done());
    }
    guarded("Poisson polytope: numeric f-vector matches exact, d=3 alpha=2", [&] {
        auto num = poisson_polytope_numeric(3, 2.0);
        auto ex = poisson_polytope_fvector(3, 2);
        double worst = 0;
        for (int l = 0; l < 3; ++l) worst = std::max(worst, std::abs(num.at(l).numeric - ex.at(l).numeric));
        return result("Poisson polytope: numeric f-vector matches exact, d=3 alpha=2", worst < 1e-8,
                      str([&](auto& os) { os << "max error " << worst; }));
    });

    guarded("Voronoi: d=2 and d=3 values", [&] {
        auto v2 = typical_voronoi_fvector(2);
        auto v3 = typical_voronoi_fvector(3);
        bool ok = v2.at(0).value == PiNumber(6) && v2.at(1).value == PiNumber(6) &&
                  v3.at(0).value == PiNumber(rat(96, 35), 4) && v3.at(1).value == PiNumber(rat(144, 35), 4) &&
                  v3.at(2).value == PiNumber(2) + PiNumber(rat(48, 35), 4);
        return result("Voronoi: d=2 and d=3 values", ok);
    });
    {
        Group g("Voronoi: arithmetic forms, d <= " + std::to_string(T));
        for (int d = 1; d <= T; ++d) {
            try {
                auto v = typical_voronoi_fvector(d);
                for (int l = 0; l < d; ++l)
                    g.item(support_within(v.at(l).value, voronoi_form(d, l)), str([&](auto& os) { os << "d=" << d << " l=" << l; }));
                for (int j = 0; j < d; ++j)
                    g.item(face_intensity(d, j) * Rational(d - j + 1) == v.at(j).value, str([&](auto& os) { os << "gamma d=" << d << " j=" << j; }));
            } catch (const std::exception& e) {
                g.error("d=" + std::to_string(d), e);
            }
        }
        out.push_back(g.done());
    }

    guarded("beta polytope: Sylvester value n=4 d=2 beta=0", [&] {
        PiNumber f0 = beta_polytope_fvector(4, 2, 0).at(0).value;
        return result("beta polytope: Sylvester value n=4 d=2 beta=0", f0 == PiNumber(4) - PiNumber(rat(35, 12), -4), f0.to_string());
    });
    {
        Group g("beta and beta' polytopes: simplices, f_{d-2} = d f_{d-1} / 2, arithmetic forms");
        for (int d = 1; d <= std::min(N, 5); ++d) {
            for (int fam = 0; fam < 2; ++fam) {
                Family family = fam == 0 ? Family::beta : Family::betaprime;
                std::vector<long> tbs = fam == 0 ? std::vector<long>{-2, -1, 0, 1} : std::vector<long>{d + 1L, d + 2L, d + 3L};
                for (long tb : tbs)
                    for (int n = d + 1; n <= d + 3 && (fam == 1 || tb + d >= 0); ++n) {
                        std::string w = str([&](auto& os) { os << (fam ? "beta' " : "beta ") << "n=" << n << " d=" << d << " 2beta=" << tb; });
                        try {
                            auto f = fam == 0 ? beta_polytope_fvector(n, d, tb) : betaprime_polytope_fvector(n, d, tb);
                            if (n == d + 1)
                                for (int k = 1; k <= d; ++k) g.item(f.at(k - 1).value == PiNumber(Rational(binomial(d + 1, k))), w + " simplex");
                            if (d >= 2) g.item(f.at(d - 2).value == f.at(d - 1).value * rat(d, 2), w + " ridges");
                            for (int k = 1; k <= d; ++k)
                                g.item(support_within(f.at(k - 1).value, beta_polytope_form(family, n, d, k, tb)), w + " form");
                        } catch (const std::exception& e) {
                            g.error(w, e);
                        }
                    }
            }
        }
        out.push_back(g.done());
    }
    guarded("beta polytopes: numeric f-vectors match exact ones", [&] {
        double worst = 0;
        auto cmp = [&](const FVector& a, const FVector& b) {
            for (int l = 0; l < a.d; ++l) worst = std::max(worst, std::abs(a.at(l).numeric - b.at(l).numeric));
        };
        cmp(beta_polytope_numeric(5, 3, 0.5), beta_polytope_fvector(5, 3, 1));
        cmp(beta_polytope_numeric(6, 3, 0.0), beta_polytope_fvector(6, 3, 0));
        cmp(betaprime_polytope_numeric(5, 3, 2.5), betaprime_polytope_fvector(5, 3, 5));
        cmp(betaprime_polytope_numeric(6, 3, 3.0), betaprime_polytope_fvector(6, 3, 6));
        return result("beta polytopes: numeric f-vectors match exact ones", worst < 1e-8, str([&](auto& os) { os << "max error " << worst; }));
    });

    guarded("Reitzner: C*_{d,0} = 1 for d = 2..8", [&] {
        for (int d = 2; d <= 8; ++d)
            if (reitzner_sphere(d, 0).exact != PiNumber(1)) return result("Reitzner: C*_{d,0} = 1 for d = 2..8", false, "d=" + std::to_string(d));
        return result("Reitzner: C*_{d,0} = 1 for d = 2..8", true);
    });
    {
        Group g("Reitzner: C_{d,d-2} = d C_{d,d-1} / 2 for d = 3..8");
        for (int d = 3; d <= 8; ++d) {
            try {
                double a = reitzner_ball(d, d - 2).value, b = reitzner_ball(d, d - 1).value;
                g.item(std::abs(a - d * b / 2) <= 1e-10 * std::abs(a), "ball d=" + std::to_string(d));
                auto sa = reitzner_sphere(d, d - 2), sb = reitzner_sphere(d, d - 1);
                g.item(std::abs(sa.value - d * sb.value / 2) <= 1e-10 * std::abs(sa.value) && *sa.exact == *sb.exact * rat(d, 2),
                       "sphere d=" + std::to_string(d));
            } catch (const std::exception& e) {
                g.error("d=" + std::to_string(d), e);
            }
        }
        out.push_back(g.done());
    }
    {
        Group g("Reitzner: residue forms agree");
        for (int d = 2; d <= 8; ++d)
            for (int k = 0; k < d; ++k) {
                if (!reitzner_residue_applies(d, k)) continue;
                std::string w = str([&](auto& os) { os << "d=" << d << " k=" << k; });
                try {
                    double a = reitzner_ball(d, k).value;
                    g.item(std::abs(reitzner_ball_residue(d, k) - a) <= 1e-12 * a, "ball " + w);
                    if (d >= 3) g.item(reitzner_sphere_residue(d, k) == *reitzner_sphere(d, k).exact, "sphere " + w);
                } catch (const std::exception& e) {
                    g.error(w, e);
                }
            }
        out.push_back(g.done());
    }
    guarded("Reitzner: C_{2,0} is the disk constant", [&] {
        double want = 2 * std::cbrt(M_PI * M_PI) * std::cbrt(2.0 / 3) * std::tgamma(5.0 / 3);
        double got = reitzner_ball(2, 0).value;
        return result("Reitzner: C_{2,0} is the disk constant", std::abs(got - want) <= 1e-12 * want, str([&](auto& os) { os << got; }));
    });
    return out;
}

namespace {

CheckResult mc_check(const std::string& name, const McEstimate& e, double target) {
    double z = e.z_score(target);
    return result(name, std::abs(z) <= 4.0, str([&](auto& os) {
        os.precision(6);
        os << "mean " << e.mean << " exact " << target << " z=" << z;
    }));
}

}  // namespace

std::vector<CheckResult> montecarlo_suite(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    long T = std::max(100L, opt.trials);
    std::uint64_t seed = opt.seed;
    std::uint64_t stream = 0;
    auto next_seed = [&] { return seed + 0x9E3779B97F4A7C15ULL * ++stream; };

    int nmax = std::min(5, std::max(2, opt.max_n));
    for (int n = 2; n <= nmax; ++n)
        for (long tb : {-2L, -1L, 0L, 2L})
            for (int k = 1; k <= n; ++k) {
                std::string name = str([&](auto& os) { os << "mc J_{" << n << "," << k << "}(" << tb / 2.0 << ")"; });
                try {
                    double x = bJ_exact(n, k, tb).to_double();
                    out.push_back(mc_check(name, mc_angle_sum(Family::beta, n, k, tb / 2.0, T, 4, next_seed()), x));
                } catch (const std::exception& e) {
                    out.push_back(result(name, false, e.what()));
                }
            }
    // beta' needs beta > (n-1)/2; the grid values are defined only for n = 2, beta = 1
    for (int n = 2; n <= nmax; ++n)
        for (long tb : {2L, static_cast<long>(n), static_cast<long>(n) + 1}) {
            if (tb <= n - 1) continue;
            if (tb == 2 && n != 2) continue;
            for (int k = 1; k <= n; ++k) {
                std::string name = str([&](auto& os) { os << "mc J~_{" << n << "," << k << "}(" << tb / 2.0 << ")"; });
                try {
                    double x = bJtilde_exact(n, k, tb).to_double();
                    out.push_back(mc_check(name, mc_angle_sum(Family::betaprime, n, k, tb / 2.0, T, 4, next_seed()), x));
                } catch (const std::exception& e) {
                    out.push_back(result(name, false, e.what()));
                }
            }
        }

    for (int n : {4, 5, 6})
        for (long tb : {-2L, 0L, 2L}) {
            std::string name = str([&](auto& os) { os << "mc hull f_0 n=" << n << " beta=" << tb / 2; });
            try {
                double x = beta_polytope_fvector(n, 2, tb).at(0).value.to_double();
                out.push_back(mc_check(name, mc_beta_hull_2d(n, tb / 2.0, 5 * T, next_seed()), x));
            } catch (const std::exception& e) {
                out.push_back(result(name, false, e.what()));
            }
        }
    for (int n : {4, 5}) {
        std::string name = str([&](auto& os) { os << "mc beta' hull f_0 n=" << n << " beta=2"; });
        try {
            double x = betaprime_polytope_fvector(n, 2, 4).at(0).value.to_double();
            out.push_back(mc_check(name, mc_beta_hull_2d(n, 2.0, 5 * T, next_seed(), Family::betaprime), x));
        } catch (const std::exception& e) {
            out.push_back(result(name, false, e.what()));
        }
    }
    out.push_back(mc_check("mc Sylvester n=4 beta=0", mc_beta_hull_2d(4, 0.0, 5 * T, next_seed()), 4 - 35 / (12 * M_PI * M_PI)));

    auto v1 = mc_voronoi_2d(5.0, T, next_seed());
    out.push_back(mc_check("mc Voronoi f_0 in the plane", v1, 6.0));
    auto v4 = mc_voronoi_2d(2.5, T, next_seed(), 4.0);
    {
        double se = std::hypot(v1.stderr_, v4.stderr_);
        double z = se > 0 ? (v4.mean - v1.mean) / se : 0;
        out.push_back(result("mc Voronoi intensity 4 matches intensity 1", std::abs(z) <= 4.0, str([&](auto& os) {
                                 os.precision(6);
                                 os << "means " << v1.mean << ", " << v4.mean << " z=" << z;
                             })));
    }

    // radial laws
    long S = 100000;
    struct Law {
        std::string name;
        Family family;
        int d;
        double beta, a, b;  // r^2 (or r^2/(1+r^2)) ~ Beta(a, b)
    };
    std::vector<Law> laws = {
        {"ks beta d=2 beta=0", Family::beta, 2, 0.0, 1.0, 1.0},
        {"ks beta d=2 beta=1", Family::beta, 2, 1.0, 1.0, 2.0},
        {"ks beta d=3 beta=-1/2", Family::beta, 3, -0.5, 1.5, 0.5},
        {"ks beta' d=2 beta=3", Family::betaprime, 2, 3.0, 1.0, 2.0},
        {"ks beta' d=3 beta=2", Family::betaprime, 3, 2.0, 1.5, 0.5},
    };
    for (const auto& law : laws) {
        Rng rng(next_seed());
        std::vector<double> sample;
        sample.reserve(S);
        for (long i = 0; i < S; ++i) {
            Point p = law.family == Family::beta ? sample_beta_point(law.d, law.beta, rng) : sample_betaprime_point(law.d, law.beta, rng);
            double r2 = 0;
            for (double c : p) r2 += c * c;
            sample.push_back(law.family == Family::beta ? r2 : r2 / (1 + r2));
        }
        double ks = ks_statistic(sample, [&](double x) {
            if (x <= 0) return 0.0;
            if (x >= 1) return 1.0;
            return boost::math::ibeta(law.a, law.b, x);
        });
        double crit = ks_critical_1pct(S);
        out.push_back(result(law.name, ks < crit, str([&](auto& os) {
                                 os.precision(5);
                                 os << "D=" << ks << " critical " << crit;
                             })));
    }
    {
        Rng rng(next_seed());
        bool ok = true;
        for (int i = 0; i < 10000 && ok; ++i) {
            Point p = sample_beta_point(3, -1.0, rng);
            double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
            ok = std::abs(r - 1) < 1e-12;
        }
        out.push_back(result("sphere samples have unit norm", ok));
    }
    return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    if (suite == "relations") return relations_suite(opt);
    if (suite == "crosscheck") return crosscheck_suite(opt);
    if (suite == "montecarlo") return montecarlo_suite(opt);
    throw DomainError("unknown suite: " + suite);
}

}  // namespace aw
