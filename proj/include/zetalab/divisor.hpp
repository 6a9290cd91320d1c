#pragma once

// Divisor function sieve and the objects built on it: the divisor error
// term Delta(x), its exact piecewise integral, the summatory identity
// residual, the sawtooth psi and its Fourier partial sums, and the
// short-interval square sums.

#include <cstdint>
#include <vector>

namespace zetalab {

class DivisorTable {
  public:
    // Multiples-pass sieve, exact d(n) for n <= n_max. Guarded at 1e8.
    static DivisorTable sieve(std::uint64_t n_max);

    std::uint32_t d(std::uint64_t n) const { return d_[n]; }
    std::uint64_t prefix(std::uint64_t n) const;  // sum_{k<=n} d(k), prefix(0)=0
    std::uint64_t n_max() const { return n_max_; }

  private:
    std::uint64_t n_max_ = 0;
    std::vector<std::uint32_t> d_;
    std::vector<std::uint64_t> prefix_;
};

// Sawtooth x - [x] - 1/2; value at integers is -1/2 by definition.
double psi_of(double x);

// Partial Fourier sum -(1/pi) sum_{m<=M} sin(2 pi m x)/m. Throws
// std::domain_error within 1e-12 of an integer (the series converges to 0
// there, not to psi).
double psi_fourier(double x, int M);

// Delta(x) = prefix(floor(x)) - x(log x + 2 gamma - 1).
double delta_of(double x, const DivisorTable& table);

// Exact piecewise integral of Delta: between consecutive integers
// Delta(t) = A - t(log t + 2 gamma - 1) with A the divisor prefix, so the
// integral is closed-form. Builds a cumulative table for O(1) queries.
class DeltaIntegral {
  public:
    explicit DeltaIntegral(const DivisorTable& table);
    double integral(double x) const;  // int_1^x Delta(t) dt
    double r1(double x) const;        // integral(x) - x/4
    std::uint64_t x_max() const { return x_max_; }

  private:
    std::uint64_t x_max_;
    const DivisorTable* table_;
    std::vector<double> cum_;  // cum_[k] = int_1^{k+1} Delta
};

// One-shot variants of the integral operations.
double r1_of(double x, const DivisorTable& table);

// Residual of the summatory identity:
//   sum_{n<=x} Delta(n)
//     - [ x log x / 2 + (gamma - 1/2) x + Delta(x) + int_1^x Delta(t) dt ].
// The caller asserts |residual| <= C log x.
double delta_summatory_residual(std::uint64_t x, const DivisorTable& table);

struct ShortIntervalSq {
    double sum = 0.0;    // sum_{T<=n<=2T} (Delta(n+U) - Delta(n))^2
    double main = 0.0;   // (8/pi^2) T U log^3(sqrt(T)/U)
    double ratio = 0.0;
    bool ratio_defined = false;  // false when main == 0 (U == sqrt(T))
};

// Requires 3 <= U <= sqrt(T)/2 and 2T + U <= table.n_max.
ShortIntervalSq delta_short_interval_sq(std::uint64_t T, std::uint64_t U,
                                        const DivisorTable& table);

}  // namespace zetalab
