#pragma once

// Shared fit utilities: log-log slope estimation, dyadic-window envelopes,
// iterated logarithms. These serve every power-law scaling check in the
// test suites and reports.

#include <cstddef>
#include <span>
#include <vector>

namespace zetalab {

struct PowerLawFit {
    double slope = 0.0;
    double slope_stderr = 0.0;
    double coeff = 0.0;  // exp(intercept): y ~ coeff * x^slope
    double x_lo = 0.0;
    double x_hi = 0.0;
    int n_points = 0;
};

// Ordinary least squares of log y against log x.
// Requires >= 3 samples, x strictly increasing, y > 0.
PowerLawFit loglog_slope(std::span<const double> x, std::span<const double> y);

struct DyadicEnvelope {
    std::vector<double> centers;  // geometric centers of the windows
    std::vector<double> maxima;   // max |y| per window
};

// Max |y| over windows [2^j, 2^{j+1}). Requires at least two non-empty windows.
DyadicEnvelope dyadic_envelope(std::span<const double> x, std::span<const double> y);

// j-th iterated natural logarithm; throws std::domain_error when any
// intermediate log would be <= 0 (guard: log_{j-1} x > 1).
double iterated_log(double x, int j);

}  // namespace zetalab
