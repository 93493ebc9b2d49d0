#include "angleworks/series.hpp"

#include <algorithm>
#include <mutex>

namespace aw {

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coeffs)
    : val_(valuation), ord_(valuation + static_cast<int>(coeffs.size())), c_(std::move(coeffs)) {
    normalize();
}

LaurentSeries LaurentSeries::zero(int order) {
    LaurentSeries s;
    s.val_ = s.ord_ = order;
    return s;
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int exponent, int order) {
    if (order <= exponent) return zero(order);
    std::vector<Rational> v(static_cast<size_t>(order - exponent));
    v[0] = c;
    return LaurentSeries(exponent, std::move(v));
}

void LaurentSeries::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        val_ = ord_;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        val_ += static_cast<int>(lead);
    }
}

Rational LaurentSeries::coefficient(int j) const {
    if (j >= ord_) throw DomainError("coefficient beyond the known order");
    if (j < val_) return 0;
    return c_[static_cast<size_t>(j - val_)];
}

LaurentSeries LaurentSeries::truncated(int order) const {
    if (order >= ord_) return *this;
    if (order <= val_) return zero(order);
    return LaurentSeries(val_, std::vector<Rational>(c_.begin(), c_.begin() + (order - val_)));
}

LaurentSeries LaurentSeries::shifted(int by) const {
    LaurentSeries s = *this;
    s.val_ += by;
    s.ord_ += by;
    return s;
}

namespace {

LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, int sign) {
    int ord = std::min(a.order(), b.order());
    int val = std::min(a.valuation(), b.valuation());
    if (ord <= val) return LaurentSeries::zero(ord);
    std::vector<Rational> v(static_cast<size_t>(ord - val));
    for (int j = val; j < ord; ++j) {
        Rational x = a.coefficient(j);
        if (sign > 0)
            x += b.coefficient(j);
        else
            x -= b.coefficient(j);
        v[static_cast<size_t>(j - val)] = x;
    }
    return LaurentSeries(val, std::move(v));
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, 1); }
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, -1); }

LaurentSeries operator*(const LaurentSeries& a, const Rational& q) {
    if (q == 0) return LaurentSeries::zero(a.order());
    std::vector<Rational> v = a.coeffs();
    for (auto& x : v) x *= q;
    if (v.empty()) return a;
    return LaurentSeries(a.valuation(), std::move(v));
}

LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b) {
    int ord = std::min(a.valuation() + b.order(), b.valuation() + a.order());
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(ord);
    int val = a.valuation() + b.valuation();
    size_t n = static_cast<size_t>(ord - val);
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Rational> v(n);
    Rational t;
    for (size_t i = 0; i < n; ++i) {
        for (size_t p = 0; p <= i; ++p) {
            if (x[p] == 0 || y[i - p] == 0) continue;
            mpq_mul(t.get_mpq_t(), x[p].get_mpq_t(), y[i - p].get_mpq_t());
            v[i] += t;
        }
    }
    return LaurentSeries(val, std::move(v));
}

LaurentSeries int_power(const LaurentSeries& s, long p) {
    if (s.is_zero()) {
        if (p <= 0) throw DomainError("non-positive power of a series that is zero to its order");
        return LaurentSeries::zero(static_cast<int>(p * s.order()));
    }
    const auto& f = s.coeffs();
    size_t n = f.size();
    // J.C.P. Miller recurrence for (f_0 + f_1 x + ...)^p.
    std::vector<Rational> g(n);
    g[0] = rpow(f[0], p);
    Rational inv_f0 = Rational(1) / f[0];
    Rational t;
    for (size_t j = 1; j < n; ++j) {
        Rational acc;
        for (size_t i = 1; i <= j; ++i) {
            if (f[i] == 0 || g[j - i] == 0) continue;
            long w = p * static_cast<long>(i) - static_cast<long>(j) + static_cast<long>(i);
            if (w == 0) continue;
            mpq_mul(t.get_mpq_t(), f[i].get_mpq_t(), g[j - i].get_mpq_t());
            acc += t * w;
        }
        g[j] = acc * inv_f0 / static_cast<long>(j);
    }
    return LaurentSeries(static_cast<int>(p * s.valuation()), std::move(g));
}

LaurentSeries antiderivative_from_zero(const LaurentSeries& s) {
    if (s.is_zero()) return LaurentSeries::zero(std::max(s.order(), 0) + 1);
    if (s.valuation() < 0) throw DomainError("antiderivative of a series with negative valuation");
    std::vector<Rational> v = s.coeffs();
    for (size_t i = 0; i < v.size(); ++i) v[i] /= static_cast<long>(s.valuation() + 1 + static_cast<int>(i));
    return LaurentSeries(s.valuation() + 1, std::move(v));
}

LaurentSeries derivative(const LaurentSeries& s) {
    if (s.is_zero()) return LaurentSeries::zero(s.order() - 1);
    std::vector<Rational> v = s.coeffs();
    for (size_t i = 0; i < v.size(); ++i) v[i] *= static_cast<long>(s.valuation() + static_cast<int>(i));
    return LaurentSeries(s.valuation() - 1, std::move(v));
}

Rational residue(const LaurentSeries& s) {
    if (s.order() <= -1) throw DomainError("residue not determined at this order");
    return s.coefficient(-1);
}

namespace {

// sin(x)/x or cos(x) to n terms.
LaurentSeries trig_unit(bool cosine, int n) {
    std::vector<Rational> v(static_cast<size_t>(n));
    Integer fact = 1;
    for (int j = 0; j < n; ++j) {
        if (j > 0) fact *= j;
        if (j % 2 != 0) continue;
        Integer den = cosine ? fact : Integer(fact * (j + 1));
        v[static_cast<size_t>(j)] = Rational((j / 2) % 2 == 0 ? 1 : -1) / Rational(den);
    }
    return LaurentSeries(0, std::move(v));
}

}  // namespace

LaurentSeries sin_power(int a, int order) {
    if (a < 0) throw DomainError("sin_power needs a >= 0");
    if (order <= a) throw DomainError("sin_power needs order > a");
    return int_power(trig_unit(false, order - a), a).shifted(a);
}

LaurentSeries cos_power(int a, int order) {
    if (order <= 0) throw DomainError("cos_power needs order > 0");
    return int_power(trig_unit(true, order), a);
}

Rational bernoulli(int n) {
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    if (n < 0) throw DomainError("negative Bernoulli index");
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        Rational acc;
        for (long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[static_cast<size_t>(j)];
        cache.push_back(-acc / (m + 1));
    }
    return cache[static_cast<size_t>(n)];
}

PiNumber ugly_coefficient(const LaurentSeries& G, const PiNumber& c, int M, int a, UglyVariant variant) {
    if (a < 0) throw DomainError("u-degree must be nonnegative");
    bool sin_var = variant == UglyVariant::sin_over_tan;
    if (sin_var != (a % 2 == 0)) throw DomainError("u-degree parity does not match the variant");
    if (G.is_zero()) throw DomainError("inner series vanishes");
    if (G.valuation() < 1) throw DomainError("inner series must have valuation >= 1");

    // Residue of G^r / sin^M; precision is checked against what is needed.
    auto res_of_power = [&](int r) -> Rational {
        int need = M - r * G.valuation();
        if (need <= 0) return 0;
        if (r > 0 && G.precision() < need) throw DomainError("inner series order too small for the residue");
        LaurentSeries inv_sin = int_power(trig_unit(false, need), -M).shifted(-M);
        if (r == 0) return residue(inv_sin);
        LaurentSeries Gr = int_power(G.truncated(G.valuation() + need), r);
        return residue(multiply(Gr, inv_sin));
    };

    PiNumber total;
    for (int r = sin_var ? 1 : 0; r <= a + 1; r += 2) {
        int twice_n = a + 1 - r;
        if (twice_n < 0) break;
        int nn = twice_n / 2;
        Rational b = bernoulli(2 * nn) / Rational(factorial(2 * nn));
        Rational weight;
        if (sin_var) {
            // cot(u/2) = sum_n 2 (-1)^n B_2n / (2n)! u^(2n-1)
            weight = 2 * b * (nn % 2 == 0 ? 1 : -1);
            weight *= Rational((r - 1) / 2 % 2 == 0 ? 1 : -1) / Rational(factorial(r));
        } else {
            if (nn < 1) continue;
            // tan(u/2) = sum_{n>=1} -2 (-1)^n (4^n - 1) B_2n / (2n)! u^(2n-1)
            Integer four_n;
            mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(nn));
            weight = -2 * b * Rational(four_n - 1) * (nn % 2 == 0 ? 1 : -1);
            weight *= Rational(r / 2 % 2 == 0 ? 1 : -1) / Rational(factorial(r));
        }
        if (weight == 0) continue;
        Rational res = res_of_power(r);
        if (res == 0) continue;
        total += c.pow(r) * (weight * res);
    }
    return total;
}

}  // namespace aw
