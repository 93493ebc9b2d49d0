#pragma once

#include "angleworks/exact.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace aw {

enum class Wave { cos, sin };

struct FourierKey {
    int j;  // power of x
    int m;  // frequency
    Wave kind;
    auto operator<=>(const FourierKey&) const = default;
};

// Finite sum of q * x^j * cos(mx) and q * x^j * sin(mx), rational q.
class FourierPoly {
public:
    FourierPoly() = default;
    static FourierPoly constant(const Rational& q);
    static FourierPoly term(const Rational& q, int j, int m, Wave kind);

    const std::map<FourierKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const FourierKey& key, const Rational& q);

    FourierPoly& operator+=(const FourierPoly& o);
    FourierPoly& operator*=(const Rational& q);
    bool operator==(const FourierPoly& o) const { return terms_ == o.terms_; }

    // Exact value at x = pi/2 or x = -pi/2.
    PiNumber at_half_pi(bool negative) const;
    double eval(double x) const;

private:
    std::map<FourierKey, Rational> terms_;
};

FourierPoly operator+(FourierPoly a, const FourierPoly& b);
FourierPoly operator*(const FourierPoly& a, const FourierPoly& b);
FourierPoly operator*(FourierPoly a, const Rational& q);

// poly + constant, the constant being pi-valued.
struct ShiftedFourier {
    FourierPoly poly;
    PiNumber constant;
};

FourierPoly cos_power_fourier(int a);
// Antiderivative vanishing at -pi/2.
ShiftedFourier fourier_antiderivative(const FourierPoly& p);
// Integral over [-pi/2, pi/2].
PiNumber integrate_symmetric(const FourierPoly& p);
// Integral over [-pi/2, pi/2] of weight * (F.poly + F.constant)^r.
PiNumber integrate_weighted_power(const FourierPoly& weight, const ShiftedFourier& F, int r);

// b{nu,kappa} for rational nu, kappa with nu - kappa integral and alpha*kappa integral.
PiNumber external_lB(const Rational& nu, const Rational& kappa, int alpha);
// b~{nu,kappa}, integrand cos^(alpha kappa - 1) F~^(nu - kappa).
PiNumber external_lB_tilde(const Rational& nu, const Rational& kappa, int alpha);
PiNumber external_bI(int n, int k, int alpha);
PiNumber external_bI_tilde(int n, int k, int alpha);

// Odd polynomial in t = tan x; coeffs[i] multiplies t^i.
struct TanPoly {
    std::vector<Rational> coeffs;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// T with int_0^x sec(y)^(alpha+1) dy = T(tan x), alpha odd.
TanPoly inner_tan_antiderivative(int alpha);
// J_{n,k}((alpha-n+1)/2) for even n and odd alpha through the tangent algebra.
PiNumber bJ_exact_case_iii(int n, int k, int alpha);
// Same route for any odd alpha; also returns the imaginary part, which must vanish.
std::pair<PiNumber, PiNumber> bJ_tan_algebra(int n, int k, int alpha);

}  // namespace aw
