#include "angleworks/trig.hpp"

#include <cmath>

namespace aw {

FourierPoly FourierPoly::constant(const Rational& q) { return term(q, 0, 0, Wave::cos); }

FourierPoly FourierPoly::term(const Rational& q, int j, int m, Wave kind) {
    FourierPoly p;
    p.add({j, m, kind}, q);
    return p;
}

void FourierPoly::add(const FourierKey& key, const Rational& q) {
    FourierKey k = key;
    Rational v = q;
    if (k.m < 0) {
        k.m = -k.m;
        if (k.kind == Wave::sin) v = -v;
    }
    if (k.kind == Wave::sin && k.m == 0) return;
    if (v == 0) return;
    auto [it, inserted] = terms_.emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

FourierPoly& FourierPoly::operator+=(const FourierPoly& o) {
    for (const auto& [k, q] : o.terms_) add(k, q);
    return *this;
}

FourierPoly& FourierPoly::operator*=(const Rational& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= q;
    return *this;
}

FourierPoly operator+(FourierPoly a, const FourierPoly& b) { return a += b; }
FourierPoly operator*(FourierPoly a, const Rational& q) { return a *= q; }

FourierPoly operator*(const FourierPoly& a, const FourierPoly& b) {
    FourierPoly r;
    Rational half;
    for (const auto& [ka, qa] : a.terms()) {
        for (const auto& [kb, qb] : b.terms()) {
            half = qa * qb / 2;
            int j = ka.j + kb.j;
            int s = ka.m + kb.m, d = ka.m - kb.m;
            if (ka.kind == Wave::cos && kb.kind == Wave::cos) {
                r.add({j, d, Wave::cos}, half);
                r.add({j, s, Wave::cos}, half);
            } else if (ka.kind == Wave::sin && kb.kind == Wave::sin) {
                r.add({j, d, Wave::cos}, half);
                r.add({j, s, Wave::cos}, -half);
            } else if (ka.kind == Wave::sin) {
                r.add({j, s, Wave::sin}, half);
                r.add({j, d, Wave::sin}, half);
            } else {
                r.add({j, s, Wave::sin}, half);
                r.add({j, -d, Wave::sin}, half);
            }
        }
    }
    return r;
}

namespace {

int cos_quarter(int m) {
    static const int v[4] = {1, 0, -1, 0};
    return v[m % 4];
}
int sin_quarter(int m) {
    static const int v[4] = {0, 1, 0, -1};
    return v[m % 4];
}

// (pi/2)^j
PiNumber half_pi_power(int j) {
    Integer two_j;
    mpz_ui_pow_ui(two_j.get_mpz_t(), 2, static_cast<unsigned long>(j));
    return PiNumber(Rational(1) / Rational(two_j), 2 * j);
}

}  // namespace

PiNumber FourierPoly::at_half_pi(bool negative) const {
    PiNumber r;
    for (const auto& [k, q] : terms_) {
        int sign = (negative && k.j % 2 != 0) ? -1 : 1;
        int w = k.kind == Wave::cos ? cos_quarter(k.m) : sin_quarter(k.m);
        if (k.kind == Wave::sin && negative) w = -w;
        if (w == 0) continue;
        r += half_pi_power(k.j) * (q * (sign * w));
    }
    return r;
}

double FourierPoly::eval(double x) const {
    double s = 0;
    for (const auto& [k, q] : terms_) {
        double t = std::pow(x, k.j) * (k.kind == Wave::cos ? std::cos(k.m * x) : std::sin(k.m * x));
        s += q.get_d() * t;
    }
    return s;
}

FourierPoly cos_power_fourier(int a) {
    if (a < 0) throw DomainError("cos_power_fourier needs a >= 0");
    Integer two_a;
    mpz_ui_pow_ui(two_a.get_mpz_t(), 2, static_cast<unsigned long>(a));
    FourierPoly p;
    for (int i = 0; i <= a; ++i) p.add({0, a - 2 * i, Wave::cos}, Rational(binomial(a, i)) / Rational(two_a));
    return p;
}

namespace {

void antiderivative_term(FourierPoly& out, const Rational& q, int j, int m, Wave kind) {
    if (kind == Wave::cos && m == 0) {
        out.add({j + 1, 0, Wave::cos}, q / (j + 1));
        return;
    }
    if (kind == Wave::cos) {
        out.add({j, m, Wave::sin}, q / m);
        if (j > 0) antiderivative_term(out, -q * j / m, j - 1, m, Wave::sin);
    } else {
        out.add({j, m, Wave::cos}, -q / m);
        if (j > 0) antiderivative_term(out, q * j / m, j - 1, m, Wave::cos);
    }
}

}  // namespace

ShiftedFourier fourier_antiderivative(const FourierPoly& p) {
    ShiftedFourier F;
    for (const auto& [k, q] : p.terms()) antiderivative_term(F.poly, q, k.j, k.m, k.kind);
    F.constant = -F.poly.at_half_pi(true);
    return F;
}

PiNumber integrate_symmetric(const FourierPoly& p) {
    // Per frequency, I_c(j) and I_s(j) over [-pi/2, pi/2].
    std::map<int, int> max_j;
    for (const auto& [k, q] : p.terms()) max_j[k.m] = std::max(max_j[k.m], k.j);
    std::map<int, std::pair<std::vector<PiNumber>, std::vector<PiNumber>>> table;
    for (const auto& [m, jm] : max_j) {
        std::vector<PiNumber> Ic(static_cast<size_t>(jm) + 1), Is(static_cast<size_t>(jm) + 1);
        for (int j = 0; j <= jm; ++j) {
            if (m == 0) {
                if (j % 2 == 0) Ic[j] = half_pi_power(j + 1) * rat(2, j + 1);
                continue;
            }
            PiNumber bc, bs;
            if (j % 2 == 0)
                bc = half_pi_power(j) * rat(2 * sin_quarter(m), m);
            else
                bs = half_pi_power(j) * rat(-2 * cos_quarter(m), m);
            Ic[j] = bc;
            Is[j] = bs;
            if (j > 0) {
                Ic[j] -= Is[j - 1] * rat(j, m);
                Is[j] += Ic[j - 1] * rat(j, m);
            }
        }
        table.emplace(m, std::make_pair(std::move(Ic), std::move(Is)));
    }
    PiNumber r;
    for (const auto& [k, q] : p.terms()) {
        const auto& [Ic, Is] = table.at(k.m);
        const PiNumber& v = k.kind == Wave::cos ? Ic[k.j] : Is[k.j];
        if (!v.is_zero()) r += v * q;
    }
    return r;
}

PiNumber integrate_weighted_power(const FourierPoly& weight, const ShiftedFourier& F, int r) {
    if (r < 0) throw DomainError("negative power");
    PiNumber total;
    FourierPoly Q = weight;
    for (int i = 0; i <= r; ++i) {
        PiNumber v = integrate_symmetric(Q);
        if (!v.is_zero()) total += v * F.constant.pow(r - i) * Rational(binomial(r, i));
        if (i < r) Q = Q * F.poly;
    }
    return total;
}

namespace {

int integral_part(const Rational& q, const char* what) {
    if (q.get_den() != 1 || !q.get_num().fits_sint_p()) throw DomainError(std::string(what) + " must be an integer");
    return static_cast<int>(q.get_num().get_si());
}

}  // namespace

PiNumber external_lB(const Rational& nu, const Rational& kappa, int alpha) {
    if (alpha < 0) throw DomainError("alpha must be nonnegative");
    int r = integral_part(nu - kappa, "nu - kappa");
    if (r < 0) return PiNumber();
    int ak = integral_part(kappa * alpha, "alpha * kappa");
    if (ak < 0) throw DomainError("alpha * kappa must be nonnegative");
    ShiftedFourier F = fourier_antiderivative(cos_power_fourier(alpha));
    PiNumber v = integrate_weighted_power(cos_power_fourier(ak), F, r);
    return v * (rpow(Rational(alpha), r) / Rational(factorial(r)));
}

PiNumber external_lB_tilde(const Rational& nu, const Rational& kappa, int alpha) {
    if (alpha < 1) throw DomainError("alpha must be positive");
    int r = integral_part(nu - kappa, "nu - kappa");
    if (r < 0) return PiNumber();
    int ak = integral_part(kappa * alpha, "alpha * kappa");
    if (ak < 1) throw DomainError("alpha * kappa must be at least 1");
    ShiftedFourier F = fourier_antiderivative(cos_power_fourier(alpha - 1));
    PiNumber v = integrate_weighted_power(cos_power_fourier(ak - 1), F, r);
    return v * (rpow(Rational(alpha), r) / Rational(factorial(r)));
}

PiNumber external_bI(int n, int k, int alpha) {
    if (k < 1 || k > n) throw DomainError("external_bI needs 1 <= k <= n");
    if (alpha < 0) throw DomainError("external_bI needs alpha >= 0");
    ShiftedFourier F = fourier_antiderivative(cos_power_fourier(alpha));
    PiNumber v = integrate_weighted_power(cos_power_fourier(alpha * k), F, n - k);
    return v * c_beta(alpha * k - 1) * c_beta(alpha - 1).pow(n - k) * Rational(binomial(n, k));
}

PiNumber external_bI_tilde(int n, int k, int alpha) {
    if (k < 1 || k > n) throw DomainError("external_bI_tilde needs 1 <= k <= n");
    if (alpha < 1) throw DomainError("external_bI_tilde needs alpha >= 1");
    ShiftedFourier F = fourier_antiderivative(cos_power_fourier(alpha - 1));
    PiNumber v = integrate_weighted_power(cos_power_fourier(alpha * k - 1), F, n - k);
    return v * c_tilde_beta(alpha * k + 1) * c_tilde_beta(alpha + 1).pow(n - k) * Rational(binomial(n, k));
}

TanPoly inner_tan_antiderivative(int alpha) {
    if (alpha < 1 || alpha % 2 == 0) throw DomainError("tangent antiderivative needs odd alpha");
    int m = (alpha + 1) / 2;
    TanPoly T;
    T.coeffs.assign(static_cast<size_t>(alpha) + 1, Rational(0));
    // sec^(2m) = (1 + t^2)^(m-1) sec^2
    for (int i = 0; i <= m - 1; ++i) T.coeffs[2 * i + 1] = Rational(binomial(m - 1, i)) / (2 * i + 1);
    return T;
}

namespace {

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Integral of sin^p cos^q over [-pi/2, pi/2].
PiNumber sin_cos_integral(int p, int q) {
    if (p % 2 != 0) return PiNumber();
    return gamma_half(p + 1) * gamma_half(q + 1) / gamma_half(p + q + 2);
}

}  // namespace

std::pair<PiNumber, PiNumber> bJ_tan_algebra(int n, int k, int alpha) {
    if (k < 1 || k > n) throw DomainError("needs 1 <= k <= n");
    TanPoly T = inner_tan_antiderivative(alpha);
    int r = n - k;
    PiNumber c = c_beta(alpha - 1);
    PiNumber re, im;
    std::vector<Rational> Tj{Rational(1)};
    for (int j = 0; j <= r; ++j) {
        if (j > 0) Tj = poly_mul(Tj, T.coeffs);
        PiNumber integral;
        for (size_t p = 0; p < Tj.size(); ++p) {
            if (Tj[p] == 0) continue;
            int q = alpha * n + 1 - static_cast<int>(p);
            integral += sin_cos_integral(static_cast<int>(p), q) * Tj[p];
        }
        if (integral.is_zero()) continue;
        PiNumber term = integral * c.pow(j) * (Rational(binomial(r, j)) / rpow(Rational(2), r - j));
        switch (j % 4) {
            case 0: re += term; break;
            case 1: im += term; break;
            case 2: re -= term; break;
            default: im -= term; break;
        }
    }
    PiNumber pref = c_beta(alpha * n) * Rational(binomial(n, k));
    return {re * pref, im * pref};
}

PiNumber bJ_exact_case_iii(int n, int k, int alpha) {
    if (n % 2 != 0 || alpha % 2 == 0) throw DomainError("case (iii) needs n even and alpha odd");
    if (alpha < n - 3) throw DomainError("alpha must be at least n - 3");
    auto [re, im] = bJ_tan_algebra(n, k, alpha);
    if (!im.is_zero()) throw std::logic_error("imaginary part did not cancel: " + im.to_string());
    return re;
}

}  // namespace aw
