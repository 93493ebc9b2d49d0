#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace aw {

using Integer = mpz_class;
using Rational = mpq_class;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

Rational rat(long num, long den = 1);
Integer factorial(long n);
// Zero outside 0 <= k <= n; n >= 0.
Integer binomial(long n, long k);
Rational rpow(const Rational& q, long p);

// Element of Q[pi^(1/2), pi^(-1/2)]. Key e stands for pi^(e/2).
class PiNumber {
public:
    PiNumber() = default;
    PiNumber(const Rational& q, int half_exp = 0);
    PiNumber(long q) : PiNumber(Rational(q)) {}

    static PiNumber pi(int half_exp = 2) { return PiNumber(Rational(1), half_exp); }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_rational() const;
    Rational coeff(int half_exp) const;
    Rational to_rational() const;  // throws unless is_rational()

    PiNumber& operator+=(const PiNumber& o);
    PiNumber& operator-=(const PiNumber& o);
    PiNumber& operator*=(const PiNumber& o);
    PiNumber& operator*=(const Rational& q);
    PiNumber& operator/=(const Rational& q);
    // Divisor must be a monomial.
    PiNumber& operator/=(const PiNumber& o);

    PiNumber operator-() const;
    // Negative powers need a monomial.
    PiNumber pow(long p) const;

    bool operator==(const PiNumber& o) const { return terms_ == o.terms_; }
    bool operator!=(const PiNumber& o) const { return !(*this == o); }

    double to_double() const;
    // e.g. "539/288 * pi^-2 - 1/6"
    std::string to_string() const;
    static PiNumber parse(const std::string& text);

private:
    void add_term(int e, const Rational& q);
    std::map<int, Rational> terms_;
};

PiNumber operator+(PiNumber a, const PiNumber& b);
PiNumber operator-(PiNumber a, const PiNumber& b);
PiNumber operator*(PiNumber a, const PiNumber& b);
PiNumber operator*(PiNumber a, const Rational& q);
PiNumber operator*(const Rational& q, PiNumber a);
PiNumber operator/(PiNumber a, const Rational& q);
PiNumber operator/(PiNumber a, const PiNumber& b);

constexpr int kMaxDecimalDigits = 200;

// Correctly rounded, `digits` places after the point.
std::string to_decimal(const PiNumber& x, int digits);

// Gamma(t/2), t >= 1.
PiNumber gamma_half(long t);
// c_beta with beta = twice_beta/2, beta > -1.
PiNumber c_beta(long twice_beta);
// c~_beta with beta = twice_beta/2, beta > 1/2.
PiNumber c_tilde_beta(long twice_beta);

enum class Family { beta, betaprime };
PiNumber normalizing_constant(long d, long twice_beta, Family family);

}  // namespace aw
