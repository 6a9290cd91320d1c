#pragma once

// Exponential sums D(x, eta) = sum_{n<=x} d(n) e^{2 pi i eta n} with a
// high-precision eta, the transformation-formula residual, and the decay
// diagnostics for the eta(m) = e^{-2 pi m} family.
//
// Phase policy: eta is reduced mod 1 and scaled to a 256-bit fixed-point
// integer; n * eta mod 1 is then an exact integer addition per step, so the
// only phase error is the single initial rounding of eta (~2^-256).

#include <complex>
#include <cstdint>

#include "zetalab/bigfloat.hpp"
#include "zetalab/cf.hpp"
#include "zetalab/divisor.hpp"

namespace zetalab {

// A real number together with the count of certified decimal digits.
// Sums over n <= x require digits >= log10(x) + 13 so every phase
// n*eta mod 1 is accurate to 1e-12.
class EtaValue {
  public:
    EtaValue(BigFloat value, int certified_digits);

    static EtaValue exp_minus_two_pi_m(int m, int digits);  // e^{-2 pi m}
    static EtaValue frac_exp_two_pi(int digits);            // {e^{2 pi}}
    static EtaValue from_rational(long num, long den);      // exact
    static EtaValue from_double(double v);                  // exact dyadic

    const BigFloat& value() const { return value_; }
    int digits() const { return digits_; }

    bool is_negative() const { return value_.sign() < 0; }
    EtaValue negated() const;
    EtaValue reciprocal() const;  // 1/eta, digit budget reduced accordingly
    EtaValue truncated(int digits) const;  // for precision-policy tests

    void require_digits_for(double x) const;  // throws PrecisionError

  private:
    BigFloat value_;
    int digits_;
};

enum class WiltonMode { kFullExponential, kSineOnly };

struct WiltonSumRecord {
    double x = 0.0;
    std::complex<double> value;
    WiltonMode mode = WiltonMode::kFullExponential;
};

// D(x, eta); negative eta is handled by conjugation (real coefficients).
WiltonSumRecord wilton_sum(double x, const EtaValue& eta, const DivisorTable& table);

// Imaginary part of the full sum.
double wilton_sine_sum(double x, const EtaValue& eta, const DivisorTable& table);

struct TransformResidual {
    std::complex<double> residual;  // D(x, eta) - eta^{-1} D(eta^2 x, -eta^{-1})
    double ratio = 0.0;             // |residual| / (sqrt(x) log x)
};

// Requires eta in (0, 1] (reduced mod 1 first), eta^2 x >= 10, and both x
// and eta^2 x within the divisor table.
TransformResidual transform_residual(double x, const EtaValue& eta,
                                     const DivisorTable& table);

// |D(x, e^{-2 pi m})| / [x log x exp(-C log_2 x / log_3 x)].
// Requires x >= 1e3 and 1 <= m <= log_2 x / log_3 x.
double theorem1_ratio(double x, int m, const DivisorTable& table, double C);

// sqrt(x) log^2 x + min(a_N(2m) sqrt(x) log x, 2^{-N/2} x log x) where the
// expansion must belong to exponent index 2m. N in [1, certified_len - 1].
double bound_312_envelope(double x, int m, int N, const DivisorTable& table,
                          const ContinuedFractionExpansion& cf);

struct EnvelopeScan {
    double value = 0.0;
    int argmin_n = 0;
};

// Minimize the envelope over N in [1, certified_len).
EnvelopeScan bound_312_envelope_best(double x, int m, const DivisorTable& table,
                                     const ContinuedFractionExpansion& cf);

// H = (4K + log 2) / (4K + 2 log 2), the exponent utility for quotient
// growth a_n << e^{Kn}.
double wilton_exponent_h(double K);

}  // namespace zetalab
