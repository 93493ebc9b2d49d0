#include "angleworks/montecarlo.hpp"

#include "angleworks/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace aw {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : s_) s = splitmix64(x);
}

std::uint64_t Rng::next() {
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2 * uniform() - 1;
        v = 2 * uniform() - 1;
        s = u * u + v * v;
    } while (s >= 1 || s == 0);
    double f = std::sqrt(-2 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

double Rng::gamma(double shape) {
    if (!(shape > 0)) throw DomainError("gamma shape must be positive");
    if (shape < 1) {
        double u;
        do u = uniform();
        while (u == 0);
        return gamma(shape + 1) * std::pow(u, 1 / shape);
    }
    double d = shape - 1.0 / 3, c = 1 / std::sqrt(9 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1 + c * x;
        } while (v <= 0);
        v = v * v * v;
        double u = uniform();
        if (u < 1 - 0.0331 * x * x * x * x) return d * v;
        if (u > 0 && std::log(u) < 0.5 * x * x + d * (1 - v + std::log(v))) return d * v;
    }
}

double Rng::beta(double a, double b) {
    double x = gamma(a), y = gamma(b);
    return x / (x + y);
}

double Rng::exponential() {
    double u;
    do u = uniform();
    while (u == 0);
    return -std::log(u);
}

namespace {

Point direction(int d, Rng& rng) {
    Point p(static_cast<size_t>(d));
    double norm2;
    do {
        norm2 = 0;
        for (auto& x : p) {
            x = rng.normal();
            norm2 += x * x;
        }
    } while (norm2 == 0);
    double inv = 1 / std::sqrt(norm2);
    for (auto& x : p) x *= inv;
    return p;
}

}  // namespace

Point sample_beta_point(int d, double beta, Rng& rng) {
    if (d < 1) throw DomainError("d must be positive");
    if (!(beta >= -1)) throw DomainError("beta must be at least -1");
    Point p = direction(d, rng);
    if (beta == -1) return p;
    double r = std::sqrt(rng.beta(d / 2.0, beta + 1));
    for (auto& x : p) x *= r;
    return p;
}

Point sample_betaprime_point(int d, double beta, Rng& rng) {
    if (d < 1) throw DomainError("d must be positive");
    if (!(beta > d / 2.0)) throw DomainError("beta' points need beta > d/2");
    Point p = direction(d, rng);
    double r = std::sqrt(rng.gamma(d / 2.0) / rng.gamma(beta - d / 2.0));
    for (auto& x : p) x *= r;
    return p;
}

double McEstimate::z_score(double target) const {
    double diff = mean - target;
    if (stderr_ == 0) return diff == 0 ? 0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    return diff / stderr_;
}

namespace {

struct Moments {
    long n = 0;
    double mean = 0;
    double m2 = 0;
};

Moments merge(const Moments& a, const Moments& b) {
    if (a.n == 0) return b;
    if (b.n == 0) return a;
    Moments r;
    r.n = a.n + b.n;
    double delta = b.mean - a.mean;
    r.mean = a.mean + delta * static_cast<double>(b.n) / static_cast<double>(r.n);
    r.m2 = a.m2 + b.m2 + delta * delta * static_cast<double>(a.n) * static_cast<double>(b.n) / static_cast<double>(r.n);
    return r;
}

Moments pairwise(const std::vector<Moments>& v, size_t lo, size_t hi) {
    if (hi - lo == 1) return v[lo];
    size_t mid = lo + (hi - lo) / 2;
    return merge(pairwise(v, lo, mid), pairwise(v, mid, hi));
}

}  // namespace

McEstimate run_trials(long trials, std::uint64_t seed, const std::function<double(Rng&)>& trial) {
    if (trials < 2) throw DomainError("need at least two trials");
    size_t chunks = static_cast<size_t>((trials + kChunkTrials - 1) / kChunkTrials);
    std::vector<Moments> parts(chunks);
    parallel_for(chunks, [&](size_t c) {
        Rng rng(seed ^ static_cast<std::uint64_t>(c));
        long count = std::min<long>(kChunkTrials, trials - static_cast<long>(c) * kChunkTrials);
        Moments m;
        for (long i = 0; i < count; ++i) {
            double x = trial(rng);
            ++m.n;
            double delta = x - m.mean;
            m.mean += delta / static_cast<double>(m.n);
            m.m2 += delta * (x - m.mean);
        }
        parts[c] = m;
    });
    Moments all = pairwise(parts, 0, parts.size());
    McEstimate e;
    e.mean = all.mean;
    e.stderr_ = std::sqrt(all.m2 / static_cast<double>(all.n - 1) / static_cast<double>(all.n));
    e.trials = trials;
    e.seed = seed;
    return e;
}

McEstimate mc_angle_sum(Family family, int n, int k, double beta, long simplices, int directions,
                        std::uint64_t seed) {
    if (n < 2 || n > 7) throw DomainError("angle Monte Carlo needs 2 <= n <= 7");
    if (k < 1 || k > n) throw DomainError("needs 1 <= k <= n");
    if (directions < 1) throw DomainError("needs at least one direction");
    if (family == Family::beta && !(beta >= -1)) throw DomainError("beta must be at least -1");
    if (family == Family::betaprime && !(beta > (n - 1) / 2.0)) throw DomainError("beta must exceed (n-1)/2");
    int dim = n - 1;
    // number of k-faces containing a given set of s vertices
    std::vector<double> count(static_cast<size_t>(n) + 1, 0);
    for (int s = 0; s <= n; ++s) count[static_cast<size_t>(s)] = Integer(binomial(n - s, k - s)).get_d();
    return run_trials(simplices, seed, [&](Rng& rng) {
        Eigen::MatrixXd M(n, n);
        Eigen::PartialPivLU<Eigen::MatrixXd> lu;
        for (int attempt = 0;; ++attempt) {
            if (attempt == 100) throw DomainError("could not sample a well-conditioned simplex");
            for (int i = 0; i < n; ++i) {
                Point p = family == Family::beta ? sample_beta_point(dim, beta, rng)
                                                 : sample_betaprime_point(dim, beta, rng);
                for (int r = 0; r < dim; ++r) M(r, i) = p[static_cast<size_t>(r)];
                M(dim, i) = 1;
            }
            lu.compute(M);
            if (lu.rcond() > 1e-10) break;
        }
        Eigen::VectorXd rhs(n);
        double acc = 0;
        for (int t = 0; t < directions; ++t) {
            Point u = direction(dim, rng);
            for (int r = 0; r < dim; ++r) rhs(r) = u[static_cast<size_t>(r)];
            rhs(dim) = 0;
            // u = sum mu_i X_i with sum mu_i = 0; u lies in the tangent cone
            // at F iff every negative mu_i belongs to F
            Eigen::VectorXd mu = lu.solve(rhs);
            int neg = 0;
            for (int i = 0; i < n; ++i)
                if (mu(i) < -1e-9) ++neg;
            acc += count[static_cast<size_t>(neg)];
        }
        return acc / directions;
    });
}

std::vector<std::pair<double, double>> convex_hull(std::vector<std::pair<double, double>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](const auto& o, const auto& a, const auto& b) {
        return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<double, double>> h(2 * pts.size());
    size_t m = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (m >= 2 && cross(h[m - 2], h[m - 1], pts[i]) <= 0) --m;
        h[m++] = pts[i];
    }
    for (size_t i = pts.size() - 1, lower = m + 1; i-- > 0;) {
        while (m >= lower && cross(h[m - 2], h[m - 1], pts[i]) <= 0) --m;
        h[m++] = pts[i];
    }
    h.resize(m - 1);
    return h;
}

McEstimate mc_beta_hull_2d(int n, double beta, long trials, std::uint64_t seed, Family family) {
    if (n < 3) throw DomainError("needs n >= 3");
    if (family == Family::beta && !(beta >= -1)) throw DomainError("beta must be at least -1");
    if (family == Family::betaprime && !(beta > 1)) throw DomainError("planar beta' points need beta > 1");
    return run_trials(trials, seed, [&](Rng& rng) {
        std::vector<std::pair<double, double>> pts;
        for (int i = 0; i < n; ++i) {
            Point p = family == Family::beta ? sample_beta_point(2, beta, rng) : sample_betaprime_point(2, beta, rng);
            pts.emplace_back(p[0], p[1]);
        }
        return static_cast<double>(convex_hull(pts).size());
    });
}

std::vector<std::pair<double, double>> voronoi_cell_2d(const std::vector<std::pair<double, double>>& pts,
                                                       double window_radius) {
    using P = std::pair<double, double>;
    double R = window_radius;
    std::vector<P> poly{{-R, -R}, {R, -R}, {R, R}, {-R, R}};
    for (const P& p : pts) {
        double r2 = p.first * p.first + p.second * p.second;
        double reach = 0;
        for (const P& v : poly) reach = std::max(reach, std::hypot(v.first, v.second));
        // farther points cannot cut the cell any more
        if (r2 > 4 * reach * reach) break;
        // keep x with x.p <= |p|^2 / 2
        auto side = [&](const P& v) { return v.first * p.first + v.second * p.second - r2 / 2; };
        std::vector<P> out;
        for (size_t i = 0; i < poly.size(); ++i) {
            const P& a = poly[i];
            const P& b = poly[(i + 1) % poly.size()];
            double sa = side(a), sb = side(b);
            if (sa <= 0) out.push_back(a);
            if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
                double t = sa / (sa - sb);
                out.emplace_back(a.first + t * (b.first - a.first), a.second + t * (b.second - a.second));
            }
        }
        poly = std::move(out);
    }
    return poly;
}

McEstimate mc_voronoi_2d(double window_radius, long trials, std::uint64_t seed, double intensity) {
    if (!(window_radius > 0) || !(intensity > 0)) throw DomainError("window radius and intensity must be positive");
    return run_trials(trials, seed, [&](Rng& rng) {
        std::vector<std::pair<double, double>> pts;
        double area = 0, R = window_radius;
        for (int retry = 0; retry < 12; ++retry, R *= 2) {
            // points in order of distance: pi r^2 is a Poisson process of rate intensity
            for (;;) {
                double next_area = area + rng.exponential() / intensity;
                double r = std::sqrt(next_area / M_PI);
                if (r > R) break;
                area = next_area;
                double phi = 2 * M_PI * rng.uniform();
                pts.emplace_back(r * std::cos(phi), r * std::sin(phi));
            }
            // the pending distance is discarded; memorylessness keeps the
            // process above radius R a fresh Poisson process
            area = M_PI * R * R;
            auto cell = voronoi_cell_2d(pts, R);
            double reach = 0;
            for (const auto& v : cell) reach = std::max(reach, std::hypot(v.first, v.second));
            if (reach <= R / 2) return static_cast<double>(cell.size());
        }
        throw DomainError("Voronoi window overflow");
    });
}

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    double n = static_cast<double>(sample.size()), d = 0;
    for (size_t i = 0; i < sample.size(); ++i) {
        double f = cdf(sample[i]);
        d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    return d;
}

double ks_critical_1pct(long n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

}  // namespace aw
