#include "angleworks/angles.hpp"

#include "angleworks/parallel.hpp"
#include "angleworks/series.hpp"
#include "angleworks/trig.hpp"

#include <cmath>

namespace aw {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::closed: return "closed";
        case Provenance::residue: return "residue";
        case Provenance::fill: return "fill";
        case Provenance::tan_algebra: return "tan_algebra";
        case Provenance::numeric: return "numeric";
        case Provenance::sum: return "sum";
    }
    return "?";
}

Rational residue_rational(const ResidueSpec& s) {
    if (s.a < 0 || s.p < 0 || s.q < 0) throw DomainError("residue spec must be nonnegative");
    int v = (s.a + 1) * s.p - s.q;
    if (v >= 0) return 0;
    int need = -v;
    LaurentSeries inv = int_power(sin_power(1, 1 + need), -s.q);
    if (s.p == 0) return residue(inv);
    LaurentSeries G = antiderivative_from_zero(sin_power(s.a, s.a + need));
    return residue(multiply(int_power(G, s.p), inv));
}

PiNumber bJ_residue(int n, int k, int alpha) {
    if (n < 3 || k < 1 || k > n) throw DomainError("residue formula needs n >= 3 and 1 <= k <= n");
    if (alpha < 1 || alpha < n - 3) throw DomainError("residue formula needs alpha >= max(1, n - 3)");
    bool case_i = alpha % 2 == 0 && (n - k) % 2 == 1;
    bool case_ii = alpha % 2 == 1 && n % 2 == 1;
    if (!case_i && !case_ii) throw DomainError("parity conditions of the residue formula fail");
    Rational res = residue_rational({alpha, n - k, alpha * n + 2});
    return c_beta(alpha * n) * c_beta(alpha - 1).pow(n - k) * PiNumber::pi() * (res * Rational(binomial(n, k)));
}

PiNumber bJtilde_residue(int n, int k, int alpha) {
    if (k < 1 || k > n || alpha < 1) throw DomainError("needs 1 <= k <= n and alpha >= 1");
    if ((alpha * k) % 2 != 0) throw DomainError("residue formula needs alpha k even");
    Rational res = residue_rational({alpha - 1, n - k, alpha * n - 1});
    return c_tilde_beta(alpha * n) * c_tilde_beta(alpha + 1).pow(n - k) * PiNumber::pi() *
           (res * Rational(binomial(n, k)));
}

PiNumber bJ_ugly(int n, int k, int alpha) {
    if (n < 3 || k < 1 || k > n || alpha < n - 3) throw DomainError("parameters outside the formula's range");
    if (alpha % 2 != 0 || (n - k) % 2 != 0) throw DomainError("needs alpha and n - k even");
    int M = alpha * n + 2;
    LaurentSeries G = antiderivative_from_zero(sin_power(alpha, alpha + M));
    PiNumber u = ugly_coefficient(G, c_beta(alpha - 1), M, n - k, UglyVariant::sin_over_tan);
    Rational sign = ((n - k) / 2) % 2 == 0 ? 1 : -1;
    return u * c_beta(alpha * n) * PiNumber::pi() * (sign * Rational(factorial(n)) / Rational(factorial(k)));
}

PiNumber bJtilde_ugly(int n, int k, int alpha) {
    if (k < 1 || k > n || alpha < 1) throw DomainError("parameters outside the formula's range");
    if ((alpha * k) % 2 == 0 || n == 1) throw DomainError("needs alpha k odd and n > 1");
    int M = alpha * n - 1;
    LaurentSeries G = antiderivative_from_zero(sin_power(alpha - 1, alpha - 1 + M + 1));
    bool odd_n = n % 2 == 1;
    int half = odd_n ? (n - k) / 2 : (n - k - 1) / 2;
    PiNumber u = ugly_coefficient(G, c_tilde_beta(alpha + 1), M, n - k,
                                  odd_n ? UglyVariant::sin_over_tan : UglyVariant::cos_over_cot);
    Rational sign = half % 2 == 0 ? 1 : -1;
    return u * c_tilde_beta(alpha * n) * PiNumber::pi() * (sign * Rational(factorial(n)) / Rational(factorial(k)));
}

std::vector<PiNumber> poincare_fill(const std::vector<std::optional<PiNumber>>& z) {
    if (z.empty() || !z[0]) throw DomainError("z_0 must be given");
    int n = static_cast<int>(z.size()) - 1;
    int parity = -1;
    for (int k = 1; k <= n; ++k) {
        if (z[k]) continue;
        int p = (n - k) % 2;
        if (parity >= 0 && parity != p) throw DomainError("missing entries span both parity classes");
        parity = p;
    }
    std::vector<PiNumber> out(z.size());
    for (int k = 0; k <= n; ++k)
        if (z[k]) out[k] = *z[k];
    if (parity < 0) return out;

    auto known = [&](int i) -> const PiNumber& {
        if (i > n) {
            static const PiNumber zero;
            return zero;
        }
        if (!z[i]) throw DomainError("incomplete input parity class");
        return *z[i];
    };
    for (int k = 1; k < n; ++k) {
        if (z[k]) continue;
        PiNumber acc;
        for (int r = parity == 0 ? -1 : 1; k + r <= n; r += 2) {
            if (r == -1 && k == 0) continue;
            Rational w = bernoulli(r + 1) * Rational(factorial(k + r)) / Rational(factorial(r + 1) * factorial(k));
            if (parity == 1) {
                Integer two;
                mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(r + 1));
                w *= Rational(two - 1);
            }
            if (w == 0) continue;
            const PiNumber& zz = known(k + r);
            if (!zz.is_zero()) acc += zz * w;
        }
        out[k] = acc * Rational(2);
    }
    if (!z[n]) {
        if (n < 1 || !z[n - 1]) throw DomainError("cannot determine z_n");
        out[n] = *z[n - 1] * rat(2, n);
    }
    return out;
}

namespace {

AngleEntry exact_entry(PiNumber v, Provenance p) {
    AngleEntry e;
    e.exact = true;
    e.numeric = v.to_double();
    e.value = std::move(v);
    e.provenance = p;
    return e;
}

// Entries k with use(k) true are computed by f in parallel; the rest stay empty.
void compute_some(int n, const std::function<bool(int)>& use, const std::function<PiNumber(int)>& f,
                  std::vector<std::optional<PiNumber>>& z) {
    std::vector<int> ks;
    for (int k = 1; k < n; ++k)
        if (use(k)) ks.push_back(k);
    std::vector<PiNumber> vals(ks.size());
    parallel_for(ks.size(), [&](size_t i) { vals[i] = f(ks[i]); });
    for (size_t i = 0; i < ks.size(); ++i) z[ks[i]] = vals[i];
}

AngleTable assemble(Family fam, int n, long twice_beta, const std::vector<PiNumber>& z,
                    const std::vector<Provenance>& prov) {
    AngleTable t;
    t.family = fam;
    t.n = n;
    t.twice_beta = twice_beta;
    t.beta = twice_beta / 2.0;
    for (int k = 1; k <= n; ++k) t.entries.push_back(exact_entry(z[k], prov[k]));
    return t;
}

}  // namespace

AngleTable bJ_table(int n, long twice_beta) {
    if (n < 1) throw DomainError("n must be positive");
    if (twice_beta < -2) throw DomainError("beta must be at least -1");
    long alpha_l = twice_beta + n - 1;
    if (alpha_l > 100000) throw DomainError("beta too large");
    int alpha = static_cast<int>(alpha_l);
    std::vector<Provenance> prov(static_cast<size_t>(n) + 1, Provenance::closed);
    if (n <= 3) {
        static const std::vector<std::vector<PiNumber>> closed = {
            {PiNumber(), PiNumber(1)},
            {PiNumber(), PiNumber(1), PiNumber(1)},
            {PiNumber(), PiNumber(rat(1, 2)), PiNumber(rat(3, 2)), PiNumber(1)}};
        return assemble(Family::beta, n, twice_beta, closed[static_cast<size_t>(n - 1)], prov);
    }
    std::vector<std::optional<PiNumber>> z(static_cast<size_t>(n) + 1);
    z[0] = PiNumber();
    z[n] = PiNumber(1);
    if (alpha % 2 == 0) {
        compute_some(n, [&](int k) { return (n - k) % 2 == 1; }, [&](int k) { return bJ_residue(n, k, alpha); }, z);
        for (int k = 1; k < n; ++k) prov[k] = (n - k) % 2 == 1 ? Provenance::residue : Provenance::fill;
        return assemble(Family::beta, n, twice_beta, poincare_fill(z), prov);
    }
    if (n % 2 == 1) {
        compute_some(n, [](int) { return true; }, [&](int k) { return bJ_residue(n, k, alpha); }, z);
        for (int k = 1; k < n; ++k) prov[k] = Provenance::residue;
    } else {
        compute_some(n, [](int) { return true; }, [&](int k) { return bJ_exact_case_iii(n, k, alpha); }, z);
        for (int k = 1; k < n; ++k) prov[k] = Provenance::tan_algebra;
    }
    std::vector<PiNumber> v(z.size());
    for (size_t i = 0; i < z.size(); ++i) v[i] = *z[i];
    return assemble(Family::beta, n, twice_beta, v, prov);
}

AngleTable bJtilde_table(int n, long twice_beta) {
    if (n < 1) throw DomainError("n must be positive");
    long alpha_l = twice_beta - n + 1;
    if (alpha_l < 1) throw DomainError("beta' angles need beta > (n-1)/2");
    if (alpha_l > 100000) throw DomainError("beta too large");
    int alpha = static_cast<int>(alpha_l);
    std::vector<Provenance> prov(static_cast<size_t>(n) + 1, Provenance::closed);
    std::vector<std::optional<PiNumber>> z(static_cast<size_t>(n) + 1);
    z[0] = PiNumber();
    z[n] = PiNumber(1);
    auto even = [&](int k) { return (alpha * k) % 2 == 0; };
    compute_some(n, even, [&](int k) { return bJtilde_residue(n, k, alpha); }, z);
    for (int k = 1; k < n; ++k) prov[k] = even(k) ? Provenance::residue : Provenance::fill;
    return assemble(Family::betaprime, n, twice_beta, poincare_fill(z), prov);
}

PiNumber bJ_exact(int n, int k, long twice_beta) {
    if (k < 1 || k > n) throw DomainError("needs 1 <= k <= n");
    return bJ_table(n, twice_beta).at(k).value;
}

PiNumber bJtilde_exact(int n, int k, long twice_beta) {
    if (k < 1 || k > n) throw DomainError("needs 1 <= k <= n");
    return bJtilde_table(n, twice_beta).at(k).value;
}

QuadResult bJ_numeric(int n, int k, double beta) {
    if (k < 1 || k > n) throw DomainError("needs 1 <= k <= n");
    if (!(beta >= -1)) throw DomainError("beta must be at least -1");
    QuadResult one;
    one.converged = true;
    if (k == n) {
        one.value = 1;
        return one;
    }
    if (k == n - 1) {
        one.value = n / 2.0;
        return one;
    }
    return outer_integral(n, k, 2 * beta + n - 1, Family::beta);
}

QuadResult bJtilde_numeric(int n, int k, double beta) {
    if (k < 1 || k > n) throw DomainError("needs 1 <= k <= n");
    if (!(beta > (n - 1) / 2.0)) throw DomainError("beta must exceed (n-1)/2");
    if (k == n) {
        QuadResult one;
        one.value = 1;
        one.converged = true;
        return one;
    }
    return outer_integral(n, k, 2 * beta - n + 1, Family::betaprime);
}

AngleTable numeric_table(Family family, int n, double beta) {
    AngleTable t;
    t.family = family;
    t.n = n;
    t.beta = beta;
    t.entries.resize(static_cast<size_t>(n));
    parallel_for(static_cast<size_t>(n), [&](size_t i) {
        int k = static_cast<int>(i) + 1;
        QuadResult q = family == Family::beta ? bJ_numeric(n, k, beta) : bJtilde_numeric(n, k, beta);
        AngleEntry& e = t.entries[i];
        e.exact = false;
        e.numeric = q.value;
        e.abs_error = q.abs_error;
        e.provenance = Provenance::numeric;
    });
    return t;
}

namespace {

int quotient(long num, int alpha) {
    if (num % alpha != 0) throw DomainError("nu - kappa must be an integer");
    return static_cast<int>(num / alpha);
}

}  // namespace

PiNumber lA_residue(long nu_num, long kappa_num, int alpha) {
    if (alpha < 1) throw DomainError("alpha must be positive");
    int r = quotient(nu_num - kappa_num, alpha);
    if (r < 0) return PiNumber();
    if ((kappa_num + r) % 2 == 0) throw DomainError("parity violation: alpha kappa + nu - kappa must be odd");
    Rational res = residue_rational({alpha, r, static_cast<int>(nu_num)});
    return PiNumber(res * rpow(Rational(alpha), r + 1) / Rational(2 * factorial(r)));
}

PiNumber lA_tilde_residue(long nu_num, long kappa_num, int alpha) {
    if (alpha < 1) throw DomainError("alpha must be positive");
    int r = quotient(nu_num - kappa_num, alpha);
    if (r < 0) return PiNumber();
    if (kappa_num % 2 != 0) throw DomainError("parity violation: alpha kappa must be even");
    Rational res = residue_rational({alpha - 1, r, static_cast<int>(nu_num) + 1});
    return PiNumber(res * rpow(Rational(alpha), r + 1) / Rational(2 * factorial(r)));
}

Rational rm_value(int m, int n) {
    if (m < 0 || n < 3) throw DomainError("needs m >= 0 and n >= 3");
    int alpha = n + 2 * m - 2;
    PiNumber pref = c_beta(alpha * n) * c_beta(n + 2 * m - 3).pow(n - 1) * PiNumber::pi() *
                    (Rational(n) / rpow(Rational(n + 2 * m - 1), n - 1));
    return (bJ_exact(n, 1, 2 * m - 1) / pref).to_rational();
}

Rational p_alpha_k_value(int alpha, int k, int n) {
    if (alpha < 1 || k < 1 || k > n) throw DomainError("needs alpha >= 1 and 1 <= k <= n");
    if ((alpha * k) % 2 != 0) throw DomainError("needs alpha k even");
    PiNumber pref = c_tilde_beta(alpha * n) * c_tilde_beta(alpha + 1).pow(n - k) * PiNumber::pi() *
                    (Rational(binomial(n, k)) / rpow(Rational(alpha), n - k));
    return (bJtilde_exact(n, k, alpha + n - 1) / pref).to_rational();
}

}  // namespace aw
