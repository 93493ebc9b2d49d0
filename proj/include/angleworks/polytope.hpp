#pragma once

#include "angleworks/angles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aw {

enum class Model { poisson, zerocell, voronoi, beta, betaprime };
std::string to_string(Model m);

struct FaceEntry {
    bool exact = true;
    PiNumber value;
    double numeric = 0;
    double abs_error = 0;
    Provenance provenance = Provenance::sum;
};

struct FVector {
    Model model = Model::poisson;
    int d = 0;
    int n = 0;                       // beta models only
    double alpha = 0;                // poisson
    std::optional<long> twice_beta;  // exact beta models
    double beta = 0;
    std::vector<FaceEntry> entries;  // entries[l] = E f_l, l = 0..d-1
    const FaceEntry& at(int l) const { return entries.at(static_cast<size_t>(l)); }
    bool exact() const;
    // (1, f_0, ..., f_{d-1}) as PiNumbers; exact vectors only.
    std::vector<PiNumber> with_empty_face() const;
};

// I~_{inf,m}(alpha).
PiNumber poisson_weight(int m, int alpha);
FVector poisson_polytope_fvector(int d, int alpha);
FVector poisson_polytope_numeric(int d, double alpha);
// E f_{k-1} from the direct residue formula, alpha k even.
PiNumber poisson_residue(int d, int k, int alpha);
// Res_{y=0} sin(y)^(-2k-1) cos(y)^(-2d-1).
Rational sin_cos_residue(int d, int k);

FVector zero_cell_fvector(int d);
// Product formula, d - l even.
PiNumber zero_cell_product(int d, int l);
// (x / sin x)^(d+1) formula, d - l even.
PiNumber zero_cell_series(int d, int l);

FVector typical_voronoi_fvector(int d);
// gamma^(j) = E f_j(V_d) / (d - j + 1).
PiNumber face_intensity(int d, int j);

FVector beta_polytope_fvector(int n, int d, long twice_beta);
FVector beta_polytope_numeric(int n, int d, double beta);
FVector betaprime_polytope_fvector(int n, int d, long twice_beta);
FVector betaprime_polytope_numeric(int n, int d, double beta);

struct ReitznerConstant {
    int d = 0;
    int k = 0;
    bool sphere = false;
    PiNumber angle;                 // J_{d,k+1}(1/2) or J_{d,k+1}(-1/2)
    std::optional<PiNumber> exact;  // sphere only
    double value = 0;
    std::string decimal;
};

ReitznerConstant reitzner_ball(int d, int k, int digits = 20);
ReitznerConstant reitzner_sphere(int d, int k, int digits = 20);
// The residue forms; both need d odd, or d and d - k even.
bool reitzner_residue_applies(int d, int k);
double reitzner_ball_residue(int d, int k);
PiNumber reitzner_sphere_residue(int d, int k);

// Sum (-1)^l f_l = 1 - (-1)^d.
bool euler_holds(const FVector& f);
// z_k = f_{k-1} of a simplicial d-polytope, z_0 = 1:
// z_k = sum_{j >= k} (-1)^(d-j) binom(j,k) z_j for all k.
bool dehn_sommerville_holds(const std::vector<PiNumber>& z);
// The simplicial dual of a simple polytope: z_k = f_{d-k}.
std::vector<PiNumber> dual_face_vector(const FVector& f);

}  // namespace aw
