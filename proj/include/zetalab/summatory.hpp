#pragma once

// Discrete summatory consumers of the E-table: sum_{n<=x} E^k(n), the
// sawtooth-weighted zeta integral, the decomposition of sum E(n) into
// pi x + psi-integral + G(x) + residual, and power-law moment fits.

#include <cstdint>
#include <span>
#include <vector>

#include "zetalab/fitkit.hpp"
#include "zetalab/mean_square.hpp"

namespace zetalab {

inline constexpr int kMaxMomentPower = 9;

// Exact sum of tabulated E(n)^k over integers n <= x.
double sum_e_k(double x, int k, const ErrorTermTable& table);

// int_0^x psi(t) |zeta(1/2+it)|^2 dt from the table.
double psi_zeta_integral(double x, const ErrorTermTable& table);

struct Theorem2Decomposition {
    double x = 0.0;
    double sum_e = 0.0;    // sum_{n<=x} E(n)
    double pi_x = 0.0;
    double psi_int = 0.0;  // int_0^x psi |zeta|^2
    double g_x = 0.0;      // G(x)
    double residual = 0.0;
    double residual_scale = 0.0;  // |residual| / (x^{1/3} log x)
    double h_x = 0.0;             // sum_e - pi x
    double h_minus_g_scaled = 0.0;  // |h_x - g_x| / x^{0.55}, reported only
};

Theorem2Decomposition theorem2_decomposition(double x, const ErrorTermTable& table);

struct MomentSummary {
    int k = 0;
    std::vector<double> x_grid;
    std::vector<double> sums;
    double fitted_exponent = 0.0;
    double exponent_stderr = 0.0;
    double fitted_coeff = 0.0;  // constrained fit at exponent 1 + k/4
    std::vector<double> rel_residuals;  // vs fitted_coeff * x^{1+k/4}
};

// Log-log least squares of |sums| for the exponent plus a constrained
// coefficient fit at the theoretical exponent 1 + k/4. The grid must be
// increasing, within the table, and span >= 1.25 decades.
MomentSummary moment_fit(int k, std::span<const double> x_grid,
                         const ErrorTermTable& table);

// sum_{T<=n<=2T} (E(n+U) - E(n))^2, exact from the table.
double e_short_interval_sq(std::uint64_t T, std::uint64_t U,
                           const ErrorTermTable& table);

}  // namespace zetalab
