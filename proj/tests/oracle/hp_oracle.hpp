#pragma once

// Test-only high-precision oracles, independent of the double-precision
// evaluation paths they check. Everything here runs in MPFR via BigFloat:
// Euler-Maclaurin zeta with a long Bernoulli tail, complex log-gamma by
// shifted Stirling for the phase function, and Gauss-Legendre panels with
// nodes solved in working precision.

#include <utility>

#include "zetalab/bigfloat.hpp"
#include "zetalab/divisor.hpp"

namespace zetalab::oracle {

struct HpComplex {
    BigFloat re, im;
};

// zeta(1/2 + it) by Euler-Maclaurin at ~`digits` accuracy.
HpComplex zeta(double t, int digits);
BigFloat zeta_sq(double t, int digits);

// Riemann-Siegel theta via Im log Gamma(1/4 + it/2) - (t/2) log pi.
BigFloat theta(double t, int digits);

// Rotated real function Z(t) = Re[ e^{i theta(t)} zeta(1/2 + it) ].
double z_function(double t, int digits);

// Adaptive Gauss-Legendre quadrature of |zeta(1/2+it)|^2 (optionally
// weighted by the sawtooth psi; those panels split at integers).
double integrate_zeta_sq(double a, double b, int digits);
double integrate_psi_zeta_sq(double a, double b, int digits);

// Mean-square main term and error term E(T) from the quadrature above.
double main_term(double T, int digits);
double e_of(double T, int digits);

// Term-by-term high-precision evaluation of the finite approximate
// functional equation sum used by the afe module.
double afe_sum(double t, int digits, const DivisorTable& table);

}  // namespace zetalab::oracle
