#pragma once

#include "angleworks/exact.hpp"

#include <vector>

namespace aw {

// Truncated Laurent series sum_{j >= valuation} c_j x^j + O(x^order).
// The zero series is stored with no coefficients and valuation == order.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(int valuation, std::vector<Rational> coeffs);
    static LaurentSeries zero(int order);
    static LaurentSeries monomial(const Rational& c, int exponent, int order);

    int valuation() const { return val_; }
    int order() const { return ord_; }
    // Number of known terms from the valuation on.
    int precision() const { return ord_ - val_; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    // Coefficient of x^j; throws for j >= order.
    Rational coefficient(int j) const;
    LaurentSeries truncated(int order) const;
    LaurentSeries shifted(int by) const;

private:
    void normalize();
    int val_ = 0;
    int ord_ = 0;
    std::vector<Rational> c_;
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const LaurentSeries& a, const Rational& q);
LaurentSeries multiply(const LaurentSeries& a, const LaurentSeries& b);
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return multiply(a, b); }
LaurentSeries int_power(const LaurentSeries& s, long p);
LaurentSeries antiderivative_from_zero(const LaurentSeries& s);
LaurentSeries derivative(const LaurentSeries& s);
Rational residue(const LaurentSeries& s);
inline Rational coefficient(const LaurentSeries& s, int j) { return s.coefficient(j); }

LaurentSeries sin_power(int a, int order);
LaurentSeries cos_power(int a, int order);

// B_n with B_1 = -1/2. Cached; safe to call from several threads.
Rational bernoulli(int n);

enum class UglyVariant { sin_over_tan, cos_over_cot };

// [u^a x^-1] of sin(u c G(x)) / tan(u/2) / sin(x)^M, or of
// cos(u c G(x)) / cot(u/2) / sin(x)^M.
PiNumber ugly_coefficient(const LaurentSeries& G, const PiNumber& c, int M, int a, UglyVariant variant);

}  // namespace aw
