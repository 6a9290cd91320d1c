#include "zetalab/divisor.hpp"

#include <cmath>
#include <stdexcept>

#include "zetalab/constants.hpp"
#include "zetalab/errors.hpp"

namespace zetalab {

DivisorTable DivisorTable::sieve(std::uint64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("divisor_sieve: n_max must be >= 1");
    if (n_max > 100'000'000ull)
        throw CapacityError("divisor_sieve: n_max exceeds the 1e8 memory guard");

    DivisorTable t;
    t.n_max_ = n_max;
    t.d_.assign(n_max + 1, 0u);
    for (std::uint64_t i = 1; i <= n_max; ++i)
        for (std::uint64_t j = i; j <= n_max; j += i) ++t.d_[j];

    t.prefix_.assign(n_max + 1, 0ull);
    for (std::uint64_t n = 1; n <= n_max; ++n) t.prefix_[n] = t.prefix_[n - 1] + t.d_[n];
    return t;
}

std::uint64_t DivisorTable::prefix(std::uint64_t n) const {
    if (n > n_max_) throw std::out_of_range("DivisorTable::prefix: n > n_max");
    return prefix_[n];
}

double psi_of(double x) {
    if (!std::isfinite(x)) throw std::domain_error("psi_of: non-finite argument");
    return x - std::floor(x) - 0.5;
}

double psi_fourier(double x, int M) {
    if (M < 1) throw std::invalid_argument("psi_fourier: M must be >= 1");
    const double dist = std::fabs(x - std::nearbyint(x));
    if (dist < 1e-12)
        throw std::domain_error("psi_fourier: x within 1e-12 of an integer");
    const double frac = x - std::floor(x);
    double sum = 0.0, comp = 0.0;
    for (int m = M; m >= 1; --m) {
        const double term = std::sin(kTwoPi * m * frac) / m;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return -sum / kPi;
}

// Main term x(log x + 2 gamma - 1) in long double; >= 12 significant digits
// survive the cancellation against the integer prefix.
static long double divisor_main_term(long double x) {
    if (x <= 0.0L) return 0.0L;
    return x * (std::log(x) + 2.0L * kEulerGammaL - 1.0L);
}

double delta_of(double x, const DivisorTable& table) {
    if (!(x >= 1.0)) throw std::domain_error("delta_of: x must be >= 1");
    const auto n = static_cast<std::uint64_t>(std::floor(x));
    if (n > table.n_max()) throw std::out_of_range("delta_of: x > table.n_max");
    const long double p = static_cast<long double>(table.prefix(n));
    return static_cast<double>(p - divisor_main_term(x));
}

// Antiderivative of t(log t + 2 gamma - 1):
//   F(t) = t^2/2 log t - t^2/4 + (2 gamma - 1) t^2/2.
static long double main_term_antiderivative(long double t) {
    if (t <= 0.0L) return 0.0L;
    const long double t2 = t * t;
    return 0.5L * t2 * std::log(t) - 0.25L * t2 + 0.5L * (2.0L * kEulerGammaL - 1.0L) * t2;
}

// int_a^b Delta(t) dt for [a, b] inside one integer segment [k, k+1).
static long double delta_segment_integral(std::uint64_t k, long double a, long double b,
                                          const DivisorTable& table) {
    const long double pref = static_cast<long double>(table.prefix(k));
    return pref * (b - a) - (main_term_antiderivative(b) - main_term_antiderivative(a));
}

DeltaIntegral::DeltaIntegral(const DivisorTable& table)
    : x_max_(table.n_max()), table_(&table) {
    cum_.resize(x_max_);
    long double acc = 0.0L;
    cum_[0] = 0.0;  // int_1^1
    for (std::uint64_t k = 1; k < x_max_; ++k) {
        acc += delta_segment_integral(k, static_cast<long double>(k),
                                      static_cast<long double>(k + 1), *table_);
        cum_[k] = static_cast<double>(acc);
    }
}

double DeltaIntegral::integral(double x) const {
    if (!(x >= 1.0)) throw std::domain_error("DeltaIntegral::integral: x must be >= 1");
    if (x > static_cast<double>(x_max_))
        throw std::out_of_range("DeltaIntegral::integral: x > n_max");
    const auto k = static_cast<std::uint64_t>(std::floor(x));
    double whole = cum_[k - 1];
    if (x > static_cast<double>(k) && k < x_max_)
        whole += static_cast<double>(delta_segment_integral(
            k, static_cast<long double>(k), static_cast<long double>(x), *table_));
    return whole;
}

double DeltaIntegral::r1(double x) const { return integral(x) - 0.25 * x; }

double r1_of(double x, const DivisorTable& table) {
    if (!(x >= 1.0)) throw std::domain_error("r1_of: x must be >= 1");
    if (x > static_cast<double>(table.n_max()))
        throw std::out_of_range("r1_of: x > table.n_max");
    long double acc = 0.0L;
    const auto kx = static_cast<std::uint64_t>(std::floor(x));
    for (std::uint64_t k = 1; k < kx; ++k)
        acc += delta_segment_integral(k, static_cast<long double>(k),
                                      static_cast<long double>(k + 1), table);
    if (x > static_cast<double>(kx) && kx <= table.n_max())
        acc += delta_segment_integral(kx, static_cast<long double>(kx),
                                      static_cast<long double>(x), table);
    return static_cast<double>(acc) - 0.25 * x;
}

double delta_summatory_residual(std::uint64_t x, const DivisorTable& table) {
    if (x < 2) throw std::domain_error("delta_summatory_residual: x must be >= 2");
    if (x > table.n_max())
        throw std::out_of_range("delta_summatory_residual: x > table.n_max");

    // sum_{n<=x} Delta(n) = sum prefix(n) - sum n(log n + 2 gamma - 1)
    long double sum_delta = 0.0L;
    for (std::uint64_t n = 1; n <= x; ++n) {
        sum_delta += static_cast<long double>(table.prefix(n)) -
                     divisor_main_term(static_cast<long double>(n));
    }

    long double integral = 0.0L;
    for (std::uint64_t k = 1; k < x; ++k)
        integral += delta_segment_integral(k, static_cast<long double>(k),
                                           static_cast<long double>(k + 1), table);

    const long double xl = static_cast<long double>(x);
    const long double predicted = 0.5L * xl * std::log(xl) +
                                  (kEulerGammaL - 0.5L) * xl +
                                  (static_cast<long double>(table.prefix(x)) -
                                   divisor_main_term(xl)) +
                                  integral;
    return static_cast<double>(sum_delta - predicted);
}

ShortIntervalSq delta_short_interval_sq(std::uint64_t T, std::uint64_t U,
                                        const DivisorTable& table) {
    if (U < 3) throw std::domain_error("delta_short_interval_sq: U must be >= 3");
    const double sqrtT = std::sqrt(static_cast<double>(T));
    if (2.0 * static_cast<double>(U) > sqrtT)
        throw std::domain_error("delta_short_interval_sq: U must be <= sqrt(T)/2");
    if (2 * T + U > table.n_max())
        throw std::out_of_range("delta_short_interval_sq: 2T+U > table.n_max");

    auto delta_int = [&table](std::uint64_t n) -> long double {
        return static_cast<long double>(table.prefix(n)) -
               divisor_main_term(static_cast<long double>(n));
    };

    long double sum = 0.0L;
    for (std::uint64_t n = T; n <= 2 * T; ++n) {
        const long double diff = delta_int(n + U) - delta_int(n);
        sum += diff * diff;
    }

    ShortIntervalSq out;
    out.sum = static_cast<double>(sum);
    const double L = std::log(sqrtT / static_cast<double>(U));
    out.main = (8.0 / (kPi * kPi)) * static_cast<double>(T) *
               static_cast<double>(U) * L * L * L;
    if (out.main != 0.0) {
        out.ratio = out.sum / out.main;
        out.ratio_defined = true;
    }
    return out;
}

}  // namespace zetalab
