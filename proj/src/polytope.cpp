#include "angleworks/polytope.hpp"

#include "angleworks/parallel.hpp"
#include "angleworks/quadrature.hpp"
#include "angleworks/series.hpp"
#include "angleworks/trig.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>

namespace aw {

std::string to_string(Model m) {
    switch (m) {
        case Model::poisson: return "poisson";
        case Model::zerocell: return "zerocell";
        case Model::voronoi: return "voronoi";
        case Model::beta: return "beta";
        case Model::betaprime: return "betaprime";
    }
    return "?";
}

bool FVector::exact() const {
    for (const auto& e : entries)
        if (!e.exact) return false;
    return true;
}

std::vector<PiNumber> FVector::with_empty_face() const {
    if (!exact()) throw DomainError("f-vector is not exact");
    std::vector<PiNumber> z{PiNumber(1)};
    for (const auto& e : entries) z.push_back(e.value);
    return z;
}

namespace {

FaceEntry exact_face(PiNumber v, Provenance p) {
    FaceEntry e;
    e.numeric = v.to_double();
    e.value = std::move(v);
    e.provenance = p;
    return e;
}

FaceEntry numeric_face(double v, double err) {
    FaceEntry e;
    e.exact = false;
    e.numeric = v;
    e.abs_error = err;
    e.provenance = Provenance::numeric;
    return e;
}

// Indices m in {k..d} with m = d mod 2, for all k >= 1.
std::vector<int> same_parity(int d) {
    std::vector<int> ms;
    for (int m = d; m >= 1; m -= 2) ms.push_back(m);
    return ms;
}

// 2 sum_m w[m] z_m[k] over m >= k.
FVector sum_model(Model model, int d, const std::map<int, PiNumber>& w, const std::map<int, AngleTable>& tables) {
    FVector f;
    f.model = model;
    f.d = d;
    for (int k = 1; k <= d; ++k) {
        PiNumber acc;
        for (const auto& [m, wm] : w)
            if (m >= k) acc += wm * tables.at(m).at(k).value;
        f.entries.push_back(exact_face(acc * Rational(2), Provenance::sum));
    }
    return f;
}

template <class Fn>
std::map<int, AngleTable> tables_for(int d, Fn make) {
    std::vector<int> ms = same_parity(d);
    std::vector<AngleTable> out(ms.size());
    parallel_for(ms.size(), [&](size_t i) { out[i] = make(ms[i]); });
    std::map<int, AngleTable> t;
    for (size_t i = 0; i < ms.size(); ++i) t.emplace(ms[i], std::move(out[i]));
    return t;
}

double binom_real(int n, int k) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace

PiNumber poisson_weight(int m, int alpha) {
    if (m < 1 || alpha < 1) throw DomainError("needs m >= 1 and alpha >= 1");
    PiNumber w = c_tilde_beta(static_cast<long>(alpha) * m + 1) / c_tilde_beta(alpha + 1).pow(m);
    return w * (rpow(Rational(alpha), m - 1) / m);
}

FVector poisson_polytope_fvector(int d, int alpha) {
    if (d < 1) throw DomainError("d must be positive");
    if (alpha < 1) throw DomainError("exact Poisson polytope needs integer alpha >= 1");
    auto tables = tables_for(d, [&](int m) { return bJtilde_table(m, alpha + m - 1); });
    std::map<int, PiNumber> w;
    for (int m : same_parity(d)) w[m] = poisson_weight(m, alpha);
    FVector f = sum_model(Model::poisson, d, w, tables);
    f.alpha = alpha;
    return f;
}

FVector poisson_polytope_numeric(int d, double alpha) {
    if (d < 1) throw DomainError("d must be positive");
    if (!(alpha > 0)) throw DomainError("alpha must be positive");
    FVector f;
    f.model = Model::poisson;
    f.d = d;
    f.alpha = alpha;
    f.entries.resize(static_cast<size_t>(d));
    double c = c_tilde_beta_real((alpha + 1) / 2);
    parallel_for(static_cast<size_t>(d), [&](size_t i) {
        int k = static_cast<int>(i) + 1;
        double pre = binom_real(d, k) * std::pow(alpha / c, d) / M_PI;
        QuadResult q = cosh_integral(alpha * d + 1, alpha - 1, c, d - k);
        f.entries[i] = numeric_face(pre * q.value, pre * q.abs_error);
    });
    return f;
}

PiNumber poisson_residue(int d, int k, int alpha) {
    if (d < 1 || k < 1 || k > d || alpha < 1) throw DomainError("needs 1 <= k <= d and alpha >= 1");
    if ((alpha * k) % 2 != 0) throw DomainError("residue formula needs alpha k even");
    Rational res = residue_rational({alpha - 1, d - k, alpha * d + 1});
    PiNumber v = PiNumber(1) / c_tilde_beta(alpha + 1).pow(k);
    return v * (rpow(Rational(alpha), d) * Rational(binomial(d, k)) * res);
}

Rational sin_cos_residue(int d, int k) {
    if (d < 0 || k < 0) throw DomainError("needs d, k >= 0");
    int need = 2 * k + 1;
    LaurentSeries s = int_power(sin_power(1, 1 + need), -(2 * k + 1));
    LaurentSeries c = int_power(cos_power(1, need), -(2 * d + 1));
    return residue(multiply(s, c));
}

PiNumber zero_cell_series(int d, int l) {
    if (l < 0 || l > d || (d - l) % 2 != 0) throw DomainError("needs 0 <= l <= d with d - l even");
    int k = d - l;
    LaurentSeries x_over_sin = int_power(sin_power(1, k + 2).shifted(-1), -(d + 1));
    return PiNumber::pi(2 * k) * (Rational(binomial(d, k)) * x_over_sin.coefficient(k));
}

PiNumber zero_cell_product(int d, int l) {
    if (l < 0 || l > d || (d - l) % 2 != 0) throw DomainError("needs 0 <= l <= d with d - l even");
    // coefficients in x^2
    std::vector<Integer> poly{Integer(1)};
    for (int j = 1; j <= d - 1; ++j) {
        if ((j - d) % 2 == 0) continue;
        poly.push_back(Integer(0));
        for (size_t i = poly.size() - 1; i >= 1; --i) poly[i] += poly[i - 1] * j * j;
    }
    int k = d - l;
    size_t idx = static_cast<size_t>(k / 2);
    Integer c = idx < poly.size() ? poly[idx] : Integer(0);
    return PiNumber::pi(2 * k) * (Rational(c) / Rational(factorial(k)));
}

FVector zero_cell_fvector(int d) {
    if (d < 1) throw DomainError("d must be positive");
    // z_k = f_{d-k}, simplicial dual, z_0 = 1
    std::vector<std::optional<PiNumber>> z(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; k += 2) z[k] = zero_cell_series(d, d - k);
    std::vector<PiNumber> full = poincare_fill(z);
    FVector f;
    f.model = Model::zerocell;
    f.d = d;
    f.alpha = 1;
    for (int l = 0; l < d; ++l)
        f.entries.push_back(exact_face(full[d - l], (d - l) % 2 == 0 ? Provenance::residue : Provenance::fill));
    return f;
}

FVector typical_voronoi_fvector(int d) {
    FVector p = poisson_polytope_fvector(d, d);
    FVector f;
    f.model = Model::voronoi;
    f.d = d;
    f.alpha = d;
    for (int l = 0; l < d; ++l) f.entries.push_back(p.entries[static_cast<size_t>(d - l - 1)]);
    return f;
}

PiNumber face_intensity(int d, int j) {
    if (d < 1 || j < 0 || j > d) throw DomainError("needs 0 <= j <= d");
    if (j == d) return PiNumber(1);
    return typical_voronoi_fvector(d).at(j).value / Rational(d - j + 1);
}

FVector beta_polytope_fvector(int n, int d, long twice_beta) {
    if (d < 1 || n < d + 1) throw DomainError("needs n >= d + 1");
    if (twice_beta < -2) throw DomainError("beta must be at least -1");
    long alpha_l = twice_beta + d;
    if (alpha_l < 0) throw DomainError("needs 2 beta + d >= 0");
    if (alpha_l > 10000) throw DomainError("beta too large");
    int alpha = static_cast<int>(alpha_l);
    auto tables = tables_for(d, [&](int m) { return bJ_table(m, alpha - m + 1); });
    std::vector<int> ms = same_parity(d);
    std::vector<PiNumber> ext(ms.size());
    parallel_for(ms.size(), [&](size_t i) { ext[i] = external_bI(n, ms[i], alpha); });
    std::map<int, PiNumber> w;
    for (size_t i = 0; i < ms.size(); ++i) w[ms[i]] = ext[i];
    FVector f = sum_model(Model::beta, d, w, tables);
    f.n = n;
    f.twice_beta = twice_beta;
    f.beta = twice_beta / 2.0;
    f.alpha = alpha;
    return f;
}

FVector betaprime_polytope_fvector(int n, int d, long twice_beta) {
    if (d < 1 || n < d + 1) throw DomainError("needs n >= d + 1");
    long alpha_l = twice_beta - d;
    if (alpha_l < 1) throw DomainError("beta' polytope needs beta > d/2");
    if (alpha_l > 10000) throw DomainError("beta too large");
    int alpha = static_cast<int>(alpha_l);
    auto tables = tables_for(d, [&](int m) { return bJtilde_table(m, alpha + m - 1); });
    std::vector<int> ms = same_parity(d);
    std::vector<PiNumber> ext(ms.size());
    parallel_for(ms.size(), [&](size_t i) { ext[i] = external_bI_tilde(n, ms[i], alpha); });
    std::map<int, PiNumber> w;
    for (size_t i = 0; i < ms.size(); ++i) w[ms[i]] = ext[i];
    FVector f = sum_model(Model::betaprime, d, w, tables);
    f.n = n;
    f.twice_beta = twice_beta;
    f.beta = twice_beta / 2.0;
    f.alpha = alpha;
    return f;
}

namespace {

FVector numeric_beta_model(Model model, int n, int d, double beta) {
    bool tilde = model == Model::betaprime;
    double alpha = tilde ? 2 * beta - d : 2 * beta + d;
    FVector f;
    f.model = model;
    f.n = n;
    f.d = d;
    f.beta = beta;
    f.alpha = alpha;
    std::vector<int> ms = same_parity(d);
    // ext[m] and ang[m][k]
    std::vector<QuadResult> ext(ms.size());
    std::vector<std::vector<QuadResult>> ang(ms.size());
    std::vector<std::pair<size_t, int>> jobs;
    for (size_t i = 0; i < ms.size(); ++i) {
        ang[i].resize(static_cast<size_t>(ms[i]) + 1);
        for (int k = 0; k <= ms[i]; ++k) jobs.emplace_back(i, k);
    }
    parallel_for(jobs.size(), [&](size_t j) {
        auto [i, k] = jobs[j];
        int m = ms[i];
        Family fam = tilde ? Family::betaprime : Family::beta;
        if (k == 0) {
            ext[i] = external_numeric(n, m, alpha, fam);
        } else {
            ang[i][static_cast<size_t>(k)] = tilde ? bJtilde_numeric(m, k, (alpha + m - 1) / 2)
                                                   : bJ_numeric(m, k, (alpha - m + 1) / 2);
        }
    });
    for (int k = 1; k <= d; ++k) {
        double v = 0, err = 0;
        for (size_t i = 0; i < ms.size(); ++i) {
            if (ms[i] < k) continue;
            const QuadResult& a = ang[i][static_cast<size_t>(k)];
            v += 2 * ext[i].value * a.value;
            err += 2 * (std::abs(ext[i].abs_error * a.value) + std::abs(ext[i].value * a.abs_error));
        }
        f.entries.push_back(numeric_face(v, err));
    }
    return f;
}

}  // namespace

FVector beta_polytope_numeric(int n, int d, double beta) {
    if (d < 1 || n < d + 1) throw DomainError("needs n >= d + 1");
    if (!(beta >= -1) || !(2 * beta + d >= 0)) throw DomainError("beta must be at least -1");
    return numeric_beta_model(Model::beta, n, d, beta);
}

FVector betaprime_polytope_numeric(int n, int d, double beta) {
    if (d < 1 || n < d + 1) throw DomainError("needs n >= d + 1");
    if (!(beta > d / 2.0)) throw DomainError("beta' polytope needs beta > d/2");
    return numeric_beta_model(Model::betaprime, n, d, beta);
}

namespace {

class Big {
public:
    explicit Big(mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_ui(x_, 0, MPFR_RNDN);
    }
    ~Big() { mpfr_clear(x_); }
    Big(const Big&) = delete;
    Big& operator=(const Big&) = delete;
    mpfr_ptr get() { return x_; }

private:
    mpfr_t x_;
};

mpfr_prec_t bits_for(int digits) { return static_cast<mpfr_prec_t>(digits * 3.33) + 96; }

// out *= Gamma(q)^sign
void mul_gamma(mpfr_ptr out, const Rational& q, int sign, mpfr_prec_t prec) {
    Big g(prec);
    mpfr_set_q(g.get(), q.get_mpq_t(), MPFR_RNDN);
    mpfr_gamma(g.get(), g.get(), MPFR_RNDN);
    if (sign > 0)
        mpfr_mul(out, out, g.get(), MPFR_RNDN);
    else
        mpfr_div(out, out, g.get(), MPFR_RNDN);
}

// out *= base^e
void mul_pow(mpfr_ptr out, mpfr_ptr base, const Rational& e, mpfr_prec_t prec) {
    Big ex(prec), p(prec);
    mpfr_set_q(ex.get(), e.get_mpq_t(), MPFR_RNDN);
    mpfr_pow(p.get(), base, ex.get(), MPFR_RNDN);
    mpfr_mul(out, out, p.get(), MPFR_RNDN);
}

void set_pi_number(mpfr_ptr out, const PiNumber& x, mpfr_prec_t prec) {
    Big sqrtpi(prec), term(prec);
    mpfr_const_pi(sqrtpi.get(), MPFR_RNDN);
    mpfr_sqrt(sqrtpi.get(), sqrtpi.get(), MPFR_RNDN);
    mpfr_set_ui(out, 0, MPFR_RNDN);
    for (const auto& [e, q] : x.terms()) {
        mpfr_pow_si(term.get(), sqrtpi.get(), e, MPFR_RNDN);
        mpfr_mul_q(term.get(), term.get(), q.get_mpq_t(), MPFR_RNDN);
        mpfr_add(out, out, term.get(), MPFR_RNDN);
    }
}

std::string fixed_string(mpfr_ptr x, int digits) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*RNf", digits, x);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

void check_rk(int d, int k) {
    if (d < 1 || k < 0 || k > d - 1) throw DomainError("needs 0 <= k <= d - 1");
}

// Ball prefactor times J_{d,k+1}(1/2), evaluated at the given precision.
void ball_value(mpfr_ptr out, int d, const PiNumber& angle, mpfr_prec_t prec) {
    long d2 = static_cast<long>(d) * d;
    Rational e = rat(d2 + 1, d + 1);
    Big pi(prec), base(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_set_ui(out, 2, MPFR_RNDN);
    Rational pe = rat(static_cast<long>(d) * (d - 1), 2L * (d + 1));
    mul_pow(out, pi.get(), pe, prec);
    mpfr_div_z(out, out, factorial(d + 1).get_mpz_t(), MPFR_RNDN);
    mul_gamma(out, rat(d2 + 2, 2), 1, prec);
    mul_gamma(out, e, 1, prec);
    mul_gamma(out, rat(d2 + 1, 2), -1, prec);
    mpfr_set_si(base.get(), d + 1, MPFR_RNDN);
    mul_pow(out, base.get(), e, prec);
    mpfr_set_ui(base.get(), 1, MPFR_RNDN);
    mul_gamma(base.get(), rat(d + 1, 2), 1, prec);
    mul_gamma(base.get(), rat(d + 2, 2), -1, prec);
    mul_pow(out, base.get(), e, prec);
    Big j(prec);
    set_pi_number(j.get(), angle, prec);
    mpfr_mul(out, out, j.get(), MPFR_RNDN);
}

}  // namespace

bool reitzner_residue_applies(int d, int k) { return d % 2 == 1 || (d - k) % 2 == 0; }

ReitznerConstant reitzner_ball(int d, int k, int digits) {
    check_rk(d, k);
    if (digits < 0 || digits > kMaxDecimalDigits) throw DomainError("digits out of range");
    ReitznerConstant r;
    r.d = d;
    r.k = k;
    r.angle = bJ_exact(d, k + 1, 1);
    mpfr_prec_t prec = bits_for(digits);
    Big v(prec);
    ball_value(v.get(), d, r.angle, prec);
    r.value = mpfr_get_d(v.get(), MPFR_RNDN);
    r.decimal = fixed_string(v.get(), digits);
    return r;
}

double reitzner_ball_residue(int d, int k) {
    check_rk(d, k);
    if (!reitzner_residue_applies(d, k)) throw DomainError("parity conditions of the residue form fail");
    mpfr_prec_t prec = 160;
    long d2 = static_cast<long>(d) * d;
    Rational res = residue_rational({d, d - k - 1, static_cast<int>(d2) + 2});
    Big v(prec), base(prec), pi(prec);
    mpfr_set_q(v.get(), Rational(Rational(d2 + 1) / Rational(factorial(d))).get_mpq_t(), MPFR_RNDN);
    mpfr_set_si(base.get(), d + 1, MPFR_RNDN);
    Rational e1 = rat(d2 - d, d + 1);
    mul_pow(v.get(), base.get(), e1, prec);
    mpfr_mul_z(v.get(), v.get(), binomial(d, k + 1).get_mpz_t(), MPFR_RNDN);
    Rational e = rat(d2 + 1, d + 1);
    mul_gamma(v.get(), e, 1, prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_sqrt(base.get(), pi.get(), MPFR_RNDN);
    mul_gamma(base.get(), rat(d + 1, 2), 1, prec);
    mul_gamma(base.get(), rat(d + 2, 2), -1, prec);
    Rational e2 = Rational(k) + rat(2, d + 1);
    mul_pow(v.get(), base.get(), e2, prec);
    mpfr_mul_q(v.get(), v.get(), res.get_mpq_t(), MPFR_RNDN);
    return mpfr_get_d(v.get(), MPFR_RNDN);
}

ReitznerConstant reitzner_sphere(int d, int k, int digits) {
    check_rk(d, k);
    if (d < 2) throw DomainError("sphere constants need d >= 2");
    ReitznerConstant r;
    r.d = d;
    r.k = k;
    r.sphere = true;
    r.angle = bJ_exact(d, k + 1, -1);
    long dl = d;
    PiNumber pre = PiNumber::pi(d - 2) * (rpow(Rational(2), d) / Rational(dl * (dl - 1) * (dl - 1)));
    pre *= gamma_half(2 + dl * (dl - 2)) / gamma_half((dl - 1) * (dl - 1));
    pre *= (gamma_half(dl + 1) / gamma_half(dl)).pow(d - 1);
    r.exact = pre * r.angle;
    r.value = r.exact->to_double();
    r.decimal = to_decimal(*r.exact, digits);
    return r;
}

PiNumber reitzner_sphere_residue(int d, int k) {
    check_rk(d, k);
    if (d < 3) throw DomainError("residue form needs d >= 3");
    if (!reitzner_residue_applies(d, k)) throw DomainError("parity conditions of the residue form fail");
    Rational res = residue_rational({d - 2, d - k - 1, d * d - 2 * d + 2});
    PiNumber base = PiNumber::pi(1) * gamma_half(d - 1) / gamma_half(d);
    // no leading sqrt(pi): C*_{3,0} has residue 1/4 and must equal 1
    return base.pow(k) * (rpow(Rational(d - 1), d - 1) * Rational(binomial(d, k + 1)) * res / d);
}

bool euler_holds(const FVector& f) {
    PiNumber acc;
    for (int l = 0; l < f.d; ++l) {
        if (l % 2 == 0)
            acc += f.at(l).value;
        else
            acc -= f.at(l).value;
    }
    return acc == PiNumber(f.d % 2 == 0 ? 0 : 2);
}

bool dehn_sommerville_holds(const std::vector<PiNumber>& z) {
    int d = static_cast<int>(z.size()) - 1;
    if (d < 0 || z[0] != PiNumber(1)) return false;
    for (int k = 0; k <= d; ++k) {
        PiNumber acc;
        for (int j = k; j <= d; ++j) {
            PiNumber t = z[j] * Rational(binomial(j, k));
            if ((d - j) % 2 == 0)
                acc += t;
            else
                acc -= t;
        }
        if (acc != z[k]) return false;
    }
    return true;
}

std::vector<PiNumber> dual_face_vector(const FVector& f) {
    if (!f.exact()) throw DomainError("f-vector is not exact");
    std::vector<PiNumber> z{PiNumber(1)};
    for (int k = 1; k <= f.d; ++k) z.push_back(f.at(f.d - k).value);
    return z;
}

}  // namespace aw
