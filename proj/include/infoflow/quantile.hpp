#pragma once

namespace infoflow {

/// Standard normal CDF.
double normal_cdf(double x);

/// Inverse of the standard normal CDF for p in (0, 1). Rational
/// approximation followed by one Halley correction step; absolute error
/// below 1e-12 over (1e-300, 1 - 1e-16).
double normal_quantile(double p);

/// Two-sided critical value z such that P(|Z| <= z) = confidence.
double two_sided_critical(double confidence);

/// Two-sided tail probability P(|Z| >= |z|).
double two_sided_p_value(double z);

}  // namespace infoflow
