#pragma once

#include <cmath>

namespace bfi {

/// Logistic function, stable for |x| up to the full double range.
inline double sigmoid(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

/// log(1 + exp(x)) without overflow for large positive x.
inline double log1p_exp(double x) {
    if (x > 0.0) return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

/// Inverse of the standard normal CDF (Wichura's AS 241, PPND16).
/// Absolute error below 1e-15 over (0, 1); quantiles are part of the
/// external interval contract, so the precision is pinned here.
double normal_quantile(double p);

/// Upper-alpha quantile xi_alpha of the standard normal distribution.
inline double upper_quantile(double alpha) { return normal_quantile(1.0 - alpha); }

}  // namespace bfi
