#pragma once

namespace cpci::special {

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// log B(a, b) for a, b > 0, evaluated without cancellation for large
/// arguments.
double log_beta(double a, double b);

/// Regularized incomplete beta I_x(a, b). Throws InputError outside
/// x in [0,1], a > 0, b > 0.
double incomplete_beta(double x, double a, double b);

/// Density of Beta(a, b) at x in (0,1).
double beta_density(double x, double a, double b);

/// Inverse of incomplete_beta in x: returns x with I_x(a,b) = q.
double beta_quantile(double q, double a, double b);

}  // namespace cpci::special
