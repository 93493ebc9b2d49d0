#pragma once

#include "angleworks/exact.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace aw {

// xoshiro256** seeded through splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    double uniform();  // [0, 1)
    double normal();   // polar method
    double gamma(double shape);  // Marsaglia-Tsang
    double beta(double a, double b);
    double exponential();

private:
    std::uint64_t s_[4];
    bool has_spare_ = false;
    double spare_ = 0;
};

using Point = std::vector<double>;

Point sample_beta_point(int d, double beta, Rng& rng);
Point sample_betaprime_point(int d, double beta, Rng& rng);

struct McEstimate {
    double mean = 0;
    double stderr_ = 0;
    long trials = 0;
    std::uint64_t seed = 0;
    // (mean - target) / stderr; 0 when both the error and the stderr vanish.
    double z_score(double target) const;
};

// Trials are cut into fixed chunks; chunk c draws from Rng(seed ^ c), so the
// result depends only on (seed, trials).
constexpr long kChunkTrials = 512;
McEstimate run_trials(long trials, std::uint64_t seed, const std::function<double(Rng&)>& trial);

// Estimate of J_{n,k}(beta) or J~_{n,k}(beta); n <= 7.
McEstimate mc_angle_sum(Family family, int n, int k, double beta, long simplices, int directions, std::uint64_t seed);
// E f_0 of the convex hull of n planar beta (or beta') points.
McEstimate mc_beta_hull_2d(int n, double beta, long trials, std::uint64_t seed, Family family = Family::beta);
// E f_0 of the typical planar Poisson-Voronoi cell.
McEstimate mc_voronoi_2d(double window_radius, long trials, std::uint64_t seed, double intensity = 1.0);

// Vertices of the convex hull, counter-clockwise, collinear points dropped.
std::vector<std::pair<double, double>> convex_hull(std::vector<std::pair<double, double>> pts);
// Vertices of the Voronoi cell of the origin; points must be sorted by distance.
std::vector<std::pair<double, double>> voronoi_cell_2d(const std::vector<std::pair<double, double>>& pts,
                                                       double window_radius);

// Kolmogorov-Smirnov distance between the sample and a continuous CDF.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);
// Asymptotic 1% critical value.
double ks_critical_1pct(long n);

}  // namespace aw
