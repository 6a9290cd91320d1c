#pragma once

// Finite-sum representation of |zeta(1/2+it)|^2 with divisor coefficients,
// its remainder, and the mean square of the remainder. The remainder is
// the exact difference against the zeta_eval value, so reconstruction is
// an identity by construction.

#include <span>
#include <vector>

#include "zetalab/divisor.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

struct AfeSample {
    double t = 0.0;
    double afe_sum = 0.0;
    double remainder = 0.0;
};

// 2 sum_{n <= t/2pi} d(n) n^{-1/2} cos(t log(t / 2 pi n) - t - pi/4),
// compensated summation. Empty (0) below t = 2 pi.
double afe_sum(double t, const DivisorTable& table);

// |zeta(1/2+it)|^2 - afe_sum(t).
double afe_remainder(double t, const DivisorTable& table, const ZetaEvalConfig& cfg);

// int_1^T remainder(t)^2 dt with panels split at every cutoff jump t = 2 pi n.
double afe_meansquare(double T, const DivisorTable& table, const ZetaEvalConfig& cfg,
                      double tol, int workers = 0);

// Cumulative profile at several checkpoints in one sweep (checkpoints must
// be increasing and >= 1).
std::vector<double> afe_meansquare_profile(std::span<const double> checkpoints,
                                           const DivisorTable& table,
                                           const ZetaEvalConfig& cfg, double tol,
                                           int workers = 0);

}  // namespace zetalab
