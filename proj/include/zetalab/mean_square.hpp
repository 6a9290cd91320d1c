#pragma once

// The mean-square error term E(T), its integral G(x), and dense cached
// tables of both. The table grid contains every integer up to x_max so the
// discrete summatory consumers are plain lookups.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zetalab/cache.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

// Largest T the build supports (guards e_of and build_table).
inline constexpr double kSupportedTMax = 1e6;

// T (log(T / 2 pi) + 2 gamma - 1); 0 at T = 0 by continuity.
double main_term(double T);

// E(T) by direct panel quadrature; |error| <= tol + pointwise zeta budget.
double e_of(double T, const ZetaEvalConfig& cfg, double tol, int workers = 1);

class ErrorTermTable {
  public:
    double x_max() const { return x_max_; }
    double step() const { return step_; }
    double tolerance() const { return tol_; }
    const std::string& method_version() const { return method_version_; }
    const ZetaEvalConfig& config() const { return cfg_; }

    std::size_t size() const { return t_.size(); }
    std::span<const double> samples() const { return t_; }
    std::span<const double> e_values() const { return e_; }
    std::span<const double> cum_e_integral() const { return cum_e_; }
    std::span<const double> cum_psi_zeta() const { return cum_psi_; }

    // Greatest sample index with t[i] <= x.
    std::size_t index_at(double x) const;

    // E(n) for integer n <= x_max (exact table lookup).
    double e_at_integer(std::uint64_t n) const;

    // Piecewise evaluation at arbitrary x <= x_max (partial-gap quadrature
    // re-using the table's zeta config).
    double e_at(double x) const;
    double cum_e_at(double x) const;
    double cum_psi_at(double x) const;

    std::vector<std::uint8_t> serialize() const;
    static std::optional<ErrorTermTable> deserialize(
        std::span<const std::uint8_t> bytes);
    std::string param_key() const;

    friend ErrorTermTable build_table(double, const ZetaEvalConfig&, double,
                                      CacheStore*, double, int);

  private:
    double x_max_ = 0.0, step_ = 0.5, tol_ = 1e-6;
    std::string method_version_;
    ZetaEvalConfig cfg_;
    std::vector<double> t_, e_, cum_e_, cum_psi_;
};

// Build (or load from cache) the dense table over [0, x_max].
ErrorTermTable build_table(double x_max, const ZetaEvalConfig& cfg, double tol,
                           CacheStore* cache = nullptr, double step = 0.5,
                           int workers = 0);

// G(x) = int_0^x (E(u) - pi) du = cum_e_at(x) - pi x.
double g_of(double x, const ErrorTermTable& table);

}  // namespace zetalab
