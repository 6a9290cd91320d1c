#include "zetalab/summatory.hpp"

#include <cmath>
#include <stdexcept>

#include "zetalab/constants.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

namespace {

double pow_int(double v, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= v;
    return r;
}

}  // namespace

double sum_e_k(double x, int k, const ErrorTermTable& table) {
    if (k < 1 || k > kMaxMomentPower)
        throw std::domain_error("sum_e_k: k must be in [1, 9]");
    if (x > table.x_max()) throw std::out_of_range("sum_e_k: x > table.x_max");
    if (x < 1.0) return 0.0;
    const auto nx = static_cast<std::uint64_t>(std::floor(x));
    Kahan acc;
    for (std::uint64_t n = 1; n <= nx; ++n)
        acc.add(pow_int(table.e_at_integer(n), k));
    return acc.sum;
}

double psi_zeta_integral(double x, const ErrorTermTable& table) {
    if (!(x >= 0.0)) throw std::domain_error("psi_zeta_integral: x must be >= 0");
    if (x > table.x_max())
        throw std::out_of_range("psi_zeta_integral: x > table.x_max");
    if (x == 0.0) return 0.0;
    return table.cum_psi_at(x);
}

Theorem2Decomposition theorem2_decomposition(double x, const ErrorTermTable& table) {
    if (!(x >= 1.0)) throw std::domain_error("theorem2_decomposition: x must be >= 1");
    if (x > table.x_max())
        throw std::out_of_range("theorem2_decomposition: x > table.x_max");

    Theorem2Decomposition out;
    out.x = x;
    out.sum_e = sum_e_k(x, 1, table);
    out.pi_x = kPi * x;
    out.psi_int = psi_zeta_integral(x, table);
    out.g_x = g_of(x, table);
    out.residual = out.sum_e - out.pi_x - out.psi_int - out.g_x;
    out.residual_scale =
        std::fabs(out.residual) / (std::cbrt(x) * std::log(std::max(x, 2.0)));
    out.h_x = out.sum_e - out.pi_x;
    out.h_minus_g_scaled = std::fabs(out.h_x - out.g_x) / std::pow(x, 0.55);
    return out;
}

MomentSummary moment_fit(int k, std::span<const double> x_grid,
                         const ErrorTermTable& table) {
    if (k < 1 || k > kMaxMomentPower)
        throw std::domain_error("moment_fit: k must be in [1, 9]");
    if (x_grid.size() < 3)
        throw std::invalid_argument("moment_fit: grid needs >= 3 points");
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (x_grid[i] > table.x_max())
            throw std::out_of_range("moment_fit: grid point > table.x_max");
        if (i > 0 && !(x_grid[i] > x_grid[i - 1]))
            throw std::invalid_argument("moment_fit: grid must be increasing");
    }
    if (std::log10(x_grid.back() / x_grid.front()) < 1.25)
        throw std::invalid_argument("moment_fit: grid must span >= 1.25 decades");

    MomentSummary out;
    out.k = k;
    out.x_grid.assign(x_grid.begin(), x_grid.end());
    out.sums.reserve(x_grid.size());

    // One ascending pass over the integers serves all grid points.
    Kahan acc;
    std::uint64_t n = 1;
    for (double x : x_grid) {
        const auto nx = static_cast<std::uint64_t>(std::floor(x));
        for (; n <= nx; ++n) acc.add(pow_int(table.e_at_integer(n), k));
        out.sums.push_back(acc.sum);
    }

    std::vector<double> abs_sums;
    abs_sums.reserve(out.sums.size());
    for (double s : out.sums) {
        if (s == 0.0)
            throw std::invalid_argument("moment_fit: zero sum in the grid (degenerate)");
        abs_sums.push_back(std::fabs(s));
    }
    const PowerLawFit fit = loglog_slope(out.x_grid, abs_sums);
    out.fitted_exponent = fit.slope;
    out.exponent_stderr = fit.slope_stderr;

    // Constrained least squares at the theoretical exponent 1 + k/4.
    const double theta = 1.0 + 0.25 * k;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < out.sums.size(); ++i) {
        const double xp = std::pow(out.x_grid[i], theta);
        num += out.sums[i] * xp;
        den += xp * xp;
    }
    out.fitted_coeff = num / den;
    out.rel_residuals.reserve(out.sums.size());
    for (std::size_t i = 0; i < out.sums.size(); ++i) {
        const double model = out.fitted_coeff * std::pow(out.x_grid[i], theta);
        out.rel_residuals.push_back((out.sums[i] - model) /
                                    std::max(std::fabs(model), 1e-300));
    }
    return out;
}

double e_short_interval_sq(std::uint64_t T, std::uint64_t U,
                           const ErrorTermTable& table) {
    if (static_cast<double>(2 * T + U) > table.x_max())
        throw std::out_of_range("e_short_interval_sq: 2T+U > table.x_max");
    if (T < 1) throw std::domain_error("e_short_interval_sq: T must be >= 1");
    Kahan acc;
    for (std::uint64_t n = T; n <= 2 * T; ++n) {
        const double diff = table.e_at_integer(n + U) - table.e_at_integer(n);
        acc.add(diff * diff);
    }
    return acc.sum;
}

}  // namespace zetalab
