#pragma once

namespace vecsim {

// Inverse standard normal CDF (Wichura's AS241, double precision).
// Requires 0 < p < 1.
double normal_quantile(double p);

// Quantile of the chi-square distribution with one degree of freedom,
// i.e. the square of the two-sided normal quantile.
double chi2_quantile_1df(double p);

}  // namespace vecsim
