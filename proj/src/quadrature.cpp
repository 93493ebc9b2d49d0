#include "angleworks/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace aw {

namespace {

constexpr int kNodes = 20;

struct Rule {
    std::array<double, kNodes> x;  // on [0, 1]
    std::array<double, kNodes> w;
};

const Rule& rule() {
    static const Rule r = [] {
        using G = boost::math::quadrature::gauss<double, kNodes>;
        Rule out{};
        const auto& a = G::abscissa();
        const auto& w = G::weights();
        int idx = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            out.x[idx] = 0.5 - 0.5 * a[i];
            out.w[idx++] = 0.5 * w[i];
            out.x[idx] = 0.5 + 0.5 * a[i];
            out.w[idx++] = 0.5 * w[i];
        }
        return out;
    }();
    return r;
}

double log_cosh(double u) {
    double a = std::abs(u);
    return a + std::log1p(std::exp(-2 * a)) - std::log(2.0);
}

double cosh_pow(double u, double q) { return std::exp(q * log_cosh(u)); }

double gl(double a, double b, double q, long& evals) {
    const Rule& R = rule();
    double s = 0, h = b - a;
    for (int i = 0; i < kNodes; ++i) s += R.w[i] * cosh_pow(a + h * R.x[i], q);
    evals += kNodes;
    return s * h;
}

// Cumulative int_0^u cosh^q on a fixed panel grid over [0, U].
class Cumulative {
public:
    Cumulative(double q, double U, int panels) : q_(q), h_(U / panels), G_(static_cast<size_t>(panels) + 1) {
        for (int i = 0; i < panels; ++i) G_[i + 1] = G_[i] + gl(i * h_, (i + 1) * h_, q_, evals);
    }
    // u must lie in panel i.
    double at(int i, double u) { return G_[static_cast<size_t>(i)] + gl(i * h_, u, q_, evals); }
    long evals = 0;

private:
    double q_, h_;
    std::vector<double> G_;
};

double panel_width(double P, double q) {
    double pmax = std::max({std::abs(P), std::abs(q), 1.0});
    return std::min(0.5, 3.0 / pmax);
}

template <class Point>
QuadResult refine(double U, double h0, Point point_sum) {
    QuadResult out;
    int panels = std::max(4, static_cast<int>(std::ceil(U / h0)));
    std::pair<double, double> prev = point_sum(U, panels, out.evaluations);
    for (int level = 0; level < 6; ++level) {
        panels *= 2;
        std::pair<double, double> cur = point_sum(U, panels, out.evaluations);
        double diff = std::abs(cur.first - prev.first);
        out.value = cur.first;
        out.imag = cur.second;
        out.abs_error = diff;
        if (diff <= 1e-13 * std::max(1.0, std::abs(cur.first))) {
            out.converged = true;
            break;
        }
        prev = cur;
    }
    return out;
}

double horizon(double rate, int r, double scale) {
    double U0 = 40.0 / rate;
    return scale * std::max(1.0, (40.0 + r * std::log(2.0 + U0)) / rate);
}

}  // namespace

double c_beta_real(double beta) {
    if (!(beta > -1)) throw DomainError("c_beta needs beta > -1");
    return std::exp(std::lgamma(beta + 1.5) - std::lgamma(beta + 1)) / std::sqrt(M_PI);
}

double c_tilde_beta_real(double beta) {
    if (!(beta > 0.5)) throw DomainError("c_tilde_beta needs beta > 1/2");
    return std::exp(std::lgamma(beta) - std::lgamma(beta - 0.5)) / std::sqrt(M_PI);
}

double inner_cumulative(double alpha, double u, Family family) {
    double q = family == Family::beta ? alpha : alpha - 1;
    if (family == Family::beta && !(alpha > -1)) throw DomainError("inner integral needs alpha > -1");
    if (family == Family::betaprime && !(alpha > 0)) throw DomainError("inner integral needs alpha > 0");
    double a = std::abs(u);
    if (a == 0) return 0;
    double h = std::min(0.25, 2.0 / std::max(std::abs(q), 1.0));
    int panels = std::max(1, static_cast<int>(std::ceil(a / h)));
    long evals = 0;
    double s = 0, w = a / panels;
    for (int i = 0; i < panels; ++i) s += gl(i * w, (i + 1) * w, q, evals);
    return u < 0 ? -s : s;
}

QuadResult cosh_integral(double P, double q, double c, int r, double horizon_scale) {
    double rate = P - std::max(q, 0.0) * r;
    if (!(rate > 0)) throw DomainError("integrand does not decay");
    double U = horizon(rate, r, horizon_scale);
    auto sum = [&](double Uh, int panels, long& evals) {
        const Rule& R = rule();
        Cumulative G(q, Uh, panels);
        double h = Uh / panels;
        std::complex<double> acc{0, 0};
        for (int i = 0; i < panels; ++i) {
            for (int j = 0; j < kNodes; ++j) {
                double u = (i + R.x[j]) * h;
                std::complex<double> z(0.5, c * G.at(i, u));
                double lc = -P * log_cosh(u);
                double mag = std::exp(r * std::log(std::abs(z)) + lc);
                double th = r * std::arg(z);
                std::complex<double> fpos = std::polar(mag, th);
                // At -u the inner integral changes sign.
                std::complex<double> fneg = std::polar(mag, -th);
                acc += (R.w[j] * h) * (fpos + fneg);
            }
        }
        evals += G.evals + static_cast<long>(panels) * kNodes;
        return std::make_pair(acc.real(), acc.imag());
    };
    QuadResult out = refine(U, panel_width(P, q), sum);
    if (std::abs(out.imag) > 1e-10 * std::max(std::abs(out.value), 1e-300))
        throw std::runtime_error("imaginary part failed to cancel");
    return out;
}

QuadResult cosh_integral_real(double P, double q, double c, int r, double horizon_scale) {
    if (!(P > 0)) throw DomainError("integrand does not decay");
    if (!(q < 0)) throw DomainError("real profile needs q < 0");
    double U = horizon(P, 0, horizon_scale);
    auto sum = [&](double Uh, int panels, long& evals) {
        const Rule& R = rule();
        Cumulative G(q, Uh, panels);
        double h = Uh / panels;
        double acc = 0;
        for (int i = 0; i < panels; ++i) {
            for (int j = 0; j < kNodes; ++j) {
                double u = (i + R.x[j]) * h;
                double g = c * G.at(i, u);
                double w = cosh_pow(u, -P);
                double up = std::clamp(0.5 + g, 0.0, 1.0), dn = std::clamp(0.5 - g, 0.0, 1.0);
                acc += (R.w[j] * h) * w * (std::pow(up, r) + std::pow(dn, r));
            }
        }
        evals += G.evals + static_cast<long>(panels) * kNodes;
        return std::make_pair(acc, 0.0);
    };
    return refine(U, panel_width(P, q), sum);
}

QuadResult outer_integral(int n, int k, double alpha, Family family, double horizon_scale) {
    if (k < 1 || k > n) throw DomainError("needs 1 <= k <= n");
    double binom = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
    double pre, c, P, q;
    if (family == Family::beta) {
        if (!(alpha >= n - 3) || !(alpha > 0 || (alpha == 0 && n <= 3)))
            throw DomainError("numeric J needs alpha >= n - 3");
        pre = binom * c_beta_real(alpha * n / 2);
        c = c_beta_real((alpha - 1) / 2);
        P = alpha * n + 2;
        q = alpha;
    } else {
        if (!(alpha > 0) || !(alpha * n > 1)) throw DomainError("numeric J~ needs alpha > 0 and alpha n > 1");
        pre = binom * c_tilde_beta_real(alpha * n / 2);
        c = c_tilde_beta_real((alpha + 1) / 2);
        P = alpha * n - 1;
        q = alpha - 1;
    }
    QuadResult r = cosh_integral(P, q, c, n - k, horizon_scale);
    r.value *= pre;
    r.imag *= pre;
    r.abs_error *= pre;
    return r;
}

QuadResult external_numeric(int n, int k, double alpha, Family family) {
    if (k < 1 || k > n) throw DomainError("needs 1 <= k <= n");
    double binom = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
    QuadResult r;
    double pre;
    if (family == Family::beta) {
        if (!(alpha > -1.0 / k) || !(alpha > -1)) throw DomainError("external angle needs alpha > -1/k");
        pre = binom * c_beta_real((alpha * k - 1) / 2);
        r = cosh_integral_real(alpha * k + 1, -alpha - 1, c_beta_real((alpha - 1) / 2), n - k);
    } else {
        if (!(alpha > 0)) throw DomainError("external angle needs alpha > 0");
        pre = binom * c_tilde_beta_real((alpha * k + 1) / 2);
        r = cosh_integral_real(alpha * k, -alpha, c_tilde_beta_real((alpha + 1) / 2), n - k);
    }
    r.value *= pre;
    r.abs_error *= pre;
    return r;
}

QuadResult lA_numeric(double nu, double kappa, double alpha, Family family) {
    double rr = nu - kappa;
    int r = static_cast<int>(std::lround(rr));
    if (std::abs(rr - r) > 1e-12 || r < 0) throw DomainError("nu - kappa must be a nonnegative integer");
    double c, P, q;
    if (family == Family::beta) {
        c = c_beta_real((alpha - 1) / 2);
        P = alpha * nu;
        q = alpha;
    } else {
        c = c_tilde_beta_real((alpha + 1) / 2);
        P = alpha * nu + 1;
        q = alpha - 1;
    }
    QuadResult res = cosh_integral(P, q, c, r);
    // F(iu) = (1/2 + i c int) / c
    double pre = std::pow(alpha, r + 1) / std::tgamma(r + 1.0) / (2 * M_PI) / std::pow(c, r);
    res.value *= pre;
    res.imag *= pre;
    res.abs_error *= pre;
    return res;
}

}  // namespace aw
