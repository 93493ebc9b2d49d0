#pragma once

#include "angleworks/exact.hpp"

namespace aw {

struct QuadResult {
    double value = 0;
    double imag = 0;
    double abs_error = 0;
    long evaluations = 0;
    bool converged = false;
};

double c_beta_real(double beta);
double c_tilde_beta_real(double beta);

// int_0^u cosh(v)^alpha dv for beta, cosh(v)^(alpha-1) for beta'.
double inner_cumulative(double alpha, double u, Family family);

// int_R cosh(u)^(-P) (1/2 + i c int_0^u cosh(v)^q dv)^r du.
// horizon_scale multiplies the truncation point chosen from the decay rate.
QuadResult cosh_integral(double P, double q, double c, int r, double horizon_scale = 1.0);
// int_R cosh(u)^(-P) (1/2 + c int_0^u cosh(v)^q dv)^r du with q < 0 (a distribution function).
QuadResult cosh_integral_real(double P, double q, double c, int r, double horizon_scale = 1.0);

// J_{n,k} or J~_{n,k} as a function of alpha = 2 beta + n - 1 (beta) or 2 beta - n + 1 (beta').
QuadResult outer_integral(int n, int k, double alpha, Family family, double horizon_scale = 1.0);
// I_{n,k}(alpha) or I~_{n,k}(alpha) in the cosh parametrization.
QuadResult external_numeric(int n, int k, double alpha, Family family);
// a[nu,kappa] (beta) or a~[nu,kappa] (beta') from the imaginary-axis integral.
QuadResult lA_numeric(double nu, double kappa, double alpha, Family family);

}  // namespace aw
