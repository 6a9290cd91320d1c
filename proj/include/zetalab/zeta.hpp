#pragma once

// Evaluation of zeta(1/2 + it) and |zeta(1/2 + it)|^2 in double precision
// with a controlled absolute error.
//
// Two methods, split by t:
//   - Euler-Maclaurin summation below em_cutoff (and as a fallback whenever
//     the main-sum error budget of the other method cannot meet
//     target_abs_err). Cost O(t) per point, accuracy near machine level.
//   - Riemann-Siegel main sum plus rs_correction_terms correction terms
//     above em_cutoff. Cost O(sqrt t) per point; the correction terms are
//     evaluated from Taylor series precomputed once in extended precision.

#include <complex>

namespace zetalab {

inline constexpr int kMaxRsCorrectionTerms = 3;

struct ZetaEvalConfig {
    // Method split point. Defaults calibrated against a 30-digit oracle so
    // that the pointwise contract below holds with margin; see zeta.cpp.
    double em_cutoff = 3000.0;
    int rs_correction_terms = 3;
    double target_abs_err = 1e-8;  // pointwise goal for |zeta(1/2+it)|^2

    void validate() const;  // throws ConfigError
};

struct ZetaPoint {
    double t = 0.0;
    std::complex<double> value;  // zeta(1/2 + it)
    double sq_modulus = 0.0;     // |value|^2
};

// Pointwise |error on sq_modulus| <= cfg.target_abs_err; deterministic for
// fixed (t, cfg). Negative t is evaluated by Schwarz reflection.
ZetaPoint zeta_half_line(double t, const ZetaEvalConfig& cfg = {});

// Riemann-Siegel phase function theta(t), asymptotic expansion; absolute
// error <= 1e-10 for t >= 10. Throws std::domain_error for t <= 0.
double riemann_siegel_theta(double t);

namespace detail {

// Raw Riemann-Siegel Z(t) with the given number of correction terms and no
// accuracy fallback; exposed for the error-envelope tests.
double riemann_siegel_z_raw(double t, int terms);

// The safety envelope on |Z error| used by the method dispatcher.
double rs_z_error_envelope(int terms, double t);

}  // namespace detail

}  // namespace zetalab
