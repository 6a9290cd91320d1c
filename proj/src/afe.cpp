#include "zetalab/afe.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zetalab/constants.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/phase.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

double afe_sum(double t, const DivisorTable& table) {
    if (!(t > 0.0)) throw std::domain_error("afe_sum: t must be > 0");
    const auto cutoff = static_cast<std::uint64_t>(t / kTwoPi);
    if (cutoff > table.n_max())
        throw std::out_of_range("afe_sum: divisor table smaller than t / 2 pi");

    // Phases t log(t/2pi n) - t - pi/4 in extended precision; they reach
    // ~t log t, far beyond where plain double keeps 1e-12.
    const long double tl = t;
    const long double base = tl * std::log(tl / kTwoPiL) - tl - kPiL / 4.0L;
    Kahan sum;
    for (std::uint64_t n = 1; n <= cutoff; ++n) {
        const double ang = reduce_angle(base - tl * std::log(static_cast<long double>(n)));
        sum.add(2.0 * table.d(n) * std::cos(ang) / std::sqrt(static_cast<double>(n)));
    }
    return sum.sum;
}

double afe_remainder(double t, const DivisorTable& table, const ZetaEvalConfig& cfg) {
    return zeta_half_line(t, cfg).sq_modulus - afe_sum(t, table);
}

std::vector<double> afe_meansquare_profile(std::span<const double> checkpoints,
                                           const DivisorTable& table,
                                           const ZetaEvalConfig& cfg, double tol,
                                           int workers) {
    cfg.validate();
    if (checkpoints.empty()) return {};
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (!(checkpoints[i] >= 1.0))
            throw std::domain_error("afe_meansquare: checkpoints must be >= 1");
        if (i > 0 && !(checkpoints[i] > checkpoints[i - 1]))
            throw std::domain_error("afe_meansquare: checkpoints must be increasing");
    }
    const double T = checkpoints.back();
    if (static_cast<std::uint64_t>(T / kTwoPi) > table.n_max())
        throw std::out_of_range("afe_meansquare: divisor table smaller than T / 2 pi");

    std::vector<double> out(checkpoints.size(), 0.0);
    if (T == 1.0) return out;

    // Mandatory breakpoints: the cutoff jumps t = 2 pi n and the checkpoints.
    std::vector<double> breaks;
    for (std::uint64_t n = 1; kTwoPi * static_cast<double>(n) < T; ++n)
        breaks.push_back(kTwoPi * static_cast<double>(n));
    for (double c : checkpoints)
        if (c > 1.0 && c < T) breaks.push_back(c);
    std::sort(breaks.begin(), breaks.end());

    const auto grid = sample_grid_with_breaks(1.0, T, 0.5, breaks);
    Integrand f = [&table, cfg](double t) {
        const double r = afe_remainder(t, table, cfg);
        return r * r;
    };
    const auto gaps = sweep_gaps(f, grid, tol, workers);

    Kahan acc;
    std::size_t ci = 0;
    if (checkpoints[0] == 1.0) {
        out[0] = 0.0;
        ++ci;
    }
    for (std::size_t i = 0; i + 1 < grid.size() && ci < checkpoints.size(); ++i) {
        acc.add(gaps[i].plain);
        while (ci < checkpoints.size() && grid[i + 1] >= checkpoints[ci] - 1e-12) {
            out[ci] = acc.sum;
            ++ci;
        }
    }
    return out;
}

double afe_meansquare(double T, const DivisorTable& table, const ZetaEvalConfig& cfg,
                      double tol, int workers) {
    if (!(T >= 1.0)) throw std::domain_error("afe_meansquare: T must be >= 1");
    const double cp[1] = {T};
    return afe_meansquare_profile(cp, table, cfg, tol, workers)[0];
}

}  // namespace zetalab
