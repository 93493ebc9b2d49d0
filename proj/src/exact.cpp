#include "angleworks/exact.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace aw {

Rational rat(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (n < 0) throw DomainError("binomial with negative n");
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational rpow(const Rational& q, long p) {
    if (p < 0) {
        if (q == 0) throw DomainError("zero to a negative power");
        return rpow(Rational(1) / q, -p);
    }
    Rational num, den;
    mpz_pow_ui(num.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(p));
    mpz_pow_ui(den.get_num_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(p));
    return num / den;
}

PiNumber::PiNumber(const Rational& q, int half_exp) {
    if (q != 0) terms_[half_exp] = q;
}

bool PiNumber::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational PiNumber::coeff(int half_exp) const {
    auto it = terms_.find(half_exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational PiNumber::to_rational() const {
    if (!is_rational()) throw DomainError("value is not rational: " + to_string());
    return coeff(0);
}

void PiNumber::add_term(int e, const Rational& q) {
    if (q == 0) return;
    auto [it, inserted] = terms_.emplace(e, q);
    if (!inserted) {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
}

PiNumber& PiNumber::operator+=(const PiNumber& o) {
    for (const auto& [e, q] : o.terms_) add_term(e, q);
    return *this;
}

PiNumber& PiNumber::operator-=(const PiNumber& o) {
    for (const auto& [e, q] : o.terms_) add_term(e, -q);
    return *this;
}

PiNumber& PiNumber::operator*=(const PiNumber& o) {
    PiNumber r;
    for (const auto& [e1, q1] : terms_)
        for (const auto& [e2, q2] : o.terms_) r.add_term(e1 + e2, q1 * q2);
    terms_ = std::move(r.terms_);
    return *this;
}

PiNumber& PiNumber::operator*=(const Rational& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= q;
    return *this;
}

PiNumber& PiNumber::operator/=(const Rational& q) {
    if (q == 0) throw DomainError("division by zero");
    for (auto& [e, c] : terms_) c /= q;
    return *this;
}

PiNumber& PiNumber::operator/=(const PiNumber& o) {
    if (!o.is_monomial()) throw DomainError("division by a non-monomial PiNumber");
    const auto& [e, q] = *o.terms_.begin();
    std::map<int, Rational> r;
    for (const auto& [e1, q1] : terms_) r.emplace(e1 - e, q1 / q);
    terms_ = std::move(r);
    return *this;
}

PiNumber PiNumber::operator-() const {
    PiNumber r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

PiNumber PiNumber::pow(long p) const {
    if (p < 0) {
        if (!is_monomial()) throw DomainError("negative power of a non-monomial PiNumber");
        const auto& [e, q] = *terms_.begin();
        return PiNumber(rpow(q, p), static_cast<int>(e * p));
    }
    if (is_monomial()) {
        const auto& [e, q] = *terms_.begin();
        return PiNumber(rpow(q, p), static_cast<int>(e * p));
    }
    PiNumber result(1), base = *this;
    while (p > 0) {
        if (p & 1) result *= base;
        p >>= 1;
        if (p) base *= base;
    }
    return result;
}

PiNumber operator+(PiNumber a, const PiNumber& b) { return a += b; }
PiNumber operator-(PiNumber a, const PiNumber& b) { return a -= b; }
PiNumber operator*(PiNumber a, const PiNumber& b) { return a *= b; }
PiNumber operator*(PiNumber a, const Rational& q) { return a *= q; }
PiNumber operator*(const Rational& q, PiNumber a) { return a *= q; }
PiNumber operator/(PiNumber a, const Rational& q) { return a /= q; }
PiNumber operator/(PiNumber a, const PiNumber& b) { return a /= b; }

double PiNumber::to_double() const {
    double s = 0;
    for (const auto& [e, q] : terms_) s += q.get_d() * std::pow(M_PI, 0.5 * e);
    return s;
}

namespace {

std::string pi_text(int e) {
    if (e % 2 != 0) return "pi^(" + std::to_string(e) + "/2)";
    int k = e / 2;
    if (k == 1) return "pi";
    return "pi^" + std::to_string(k);
}

}  // namespace

std::string PiNumber::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, q] : terms_) {
        Rational a = abs(q);
        std::string body;
        if (e == 0)
            body = a.get_str();
        else if (a == 1)
            body = pi_text(e);
        else
            body = a.get_str() + " * " + pi_text(e);
        if (first)
            out = (q < 0 ? "-" : "") + body;
        else
            out += (q < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw DomainError("cannot parse PiNumber '" + s + "' at " + std::to_string(i) + ": " + why);
    }
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        ws();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    bool peek_pi() {
        ws();
        return s.compare(i, 2, "pi") == 0;
    }
    Integer digits() {
        ws();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("expected digits");
        Integer z(s.substr(i, j - i));
        i = j;
        return z;
    }
    long small_int() {
        bool neg = eat('-');
        Integer z = digits();
        if (!z.fits_slong_p()) fail("exponent too large");
        return neg ? -z.get_si() : z.get_si();
    }
    // Returns the doubled exponent.
    int pi_part() {
        ws();
        i += 2;
        if (!eat('^')) return 2;
        if (eat('(')) {
            long p = small_int();
            int e;
            if (eat('/')) {
                Integer q = digits();
                if (q == 2)
                    e = static_cast<int>(p);
                else if (q == 1)
                    e = static_cast<int>(2 * p);
                else
                    fail("exponent denominator must be 2");
            } else {
                e = static_cast<int>(2 * p);
            }
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        return static_cast<int>(2 * small_int());
    }
    std::pair<int, Rational> term() {
        Rational q(1);
        if (peek_digit()) {
            Integer num = digits();
            Integer den = 1;
            if (eat('/')) den = digits();
            if (den == 0) fail("zero denominator");
            q = Rational(num, den);
            q.canonicalize();
            if (!eat('*')) return {0, q};
        }
        if (!peek_pi()) fail("expected pi");
        return {pi_part(), q};
    }
};

}  // namespace

PiNumber PiNumber::parse(const std::string& text) {
    Parser p{text};
    PiNumber r;
    bool neg = p.eat('-');
    for (;;) {
        auto [e, q] = p.term();
        r.add_term(e, neg ? -q : q);
        p.ws();
        if (p.i >= text.size()) break;
        if (p.eat('+'))
            neg = false;
        else if (p.eat('-'))
            neg = true;
        else
            p.fail("expected '+' or '-'");
    }
    return r;
}

namespace {

// Formats round(v * 10^digits) as a decimal with `digits` places.
std::string place_point(Integer scaled, int digits, bool negative) {
    std::string s = Integer(abs(scaled)).get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - static_cast<size_t>(digits), ".");
    if (negative && scaled != 0) s.insert(0, "-");
    return s;
}

// Round half away from zero.
Integer round_rational(const Rational& q) {
    Rational a = abs(q) + Rational(1, 2);
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    return q < 0 ? Integer(-f) : f;
}

}  // namespace

std::string to_decimal(const PiNumber& x, int digits) {
    if (digits < 0 || digits > kMaxDecimalDigits) throw DomainError("digits out of range");
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    if (x.is_rational()) {
        Rational q = x.to_rational();
        return place_point(round_rational(q * ten_pow), digits, q < 0);
    }

    double approx = std::abs(x.to_double());
    long magnitude = approx > 1 ? static_cast<long>(std::log10(approx)) + 1 : 0;
    // Sum of terms can cancel; allow for the largest term as well.
    for (const auto& [e, q] : x.terms()) {
        double t = std::abs(q.get_d()) * std::pow(M_PI, 0.5 * e);
        if (t > 1) magnitude = std::max(magnitude, static_cast<long>(std::log10(t)) + 1);
    }
    long guard = 20;
    for (int attempt = 0; attempt < 8; ++attempt, guard *= 2) {
        mpfr_prec_t prec = static_cast<mpfr_prec_t>((digits + guard + magnitude) * 3.33) + 64;
        mpfr_t sqrtpi, term, sum, scaled;
        mpfr_inits2(prec, sqrtpi, term, sum, scaled, static_cast<mpfr_ptr>(nullptr));
        mpfr_const_pi(sqrtpi, MPFR_RNDN);
        mpfr_sqrt(sqrtpi, sqrtpi, MPFR_RNDN);
        mpfr_set_zero(sum, 1);
        for (const auto& [e, q] : x.terms()) {
            mpfr_pow_si(term, sqrtpi, e, MPFR_RNDN);
            mpfr_mul_q(term, term, q.get_mpq_t(), MPFR_RNDN);
            mpfr_add(sum, sum, term, MPFR_RNDN);
        }
        mpfr_mul_z(scaled, sum, ten_pow.get_mpz_t(), MPFR_RNDN);
        bool negative = mpfr_sgn(scaled) < 0;
        mpfr_abs(scaled, scaled, MPFR_RNDN);
        // Distance of the fractional part from 1/2 must exceed the error bound.
        mpfr_t frac, dist;
        mpfr_inits2(prec, frac, dist, static_cast<mpfr_ptr>(nullptr));
        mpfr_frac(frac, scaled, MPFR_RNDN);
        mpfr_sub_d(dist, frac, 0.5, MPFR_RNDN);
        mpfr_abs(dist, dist, MPFR_RNDN);
        bool ambiguous = mpfr_cmp_d(dist, std::pow(10.0, -static_cast<double>(guard) / 2)) < 0;
        Integer rounded;
        mpfr_add_d(scaled, scaled, 0.5, MPFR_RNDN);
        mpfr_get_z(rounded.get_mpz_t(), scaled, MPFR_RNDD);
        mpfr_clears(sqrtpi, term, sum, scaled, frac, dist, static_cast<mpfr_ptr>(nullptr));
        if (!ambiguous) return place_point(negative ? Integer(-rounded) : rounded, digits, negative);
    }
    throw std::runtime_error("decimal rounding remained ambiguous");
}

PiNumber gamma_half(long t) {
    if (t <= 0) throw DomainError("gamma_half needs t >= 1");
    if (t % 2 == 0) return PiNumber(Rational(factorial(t / 2 - 1)));
    Rational q(1);
    for (long j = 1; 2 * j + 1 <= t; ++j) q *= rat(2 * j - 1, 2);
    return PiNumber(q, 1);
}

PiNumber c_beta(long twice_beta) {
    if (twice_beta <= -2) throw DomainError("c_beta needs beta > -1");
    return gamma_half(twice_beta + 3) / (PiNumber::pi(1) * gamma_half(twice_beta + 2));
}

PiNumber c_tilde_beta(long twice_beta) {
    if (twice_beta <= 1) throw DomainError("c_tilde_beta needs beta > 1/2");
    return gamma_half(twice_beta) / (PiNumber::pi(1) * gamma_half(twice_beta - 1));
}

PiNumber normalizing_constant(long d, long twice_beta, Family family) {
    if (d < 1) throw DomainError("dimension must be positive");
    if (family == Family::beta) {
        if (twice_beta <= -2) throw DomainError("beta density needs beta > -1");
        return gamma_half(d + twice_beta + 2) / (PiNumber::pi(static_cast<int>(d)) * gamma_half(twice_beta + 2));
    }
    if (twice_beta <= d) throw DomainError("beta' density needs beta > d/2");
    return gamma_half(twice_beta) / (PiNumber::pi(static_cast<int>(d)) * gamma_half(twice_beta - d));
}

}  // namespace aw
