#include "zetalab/wilton.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "zetalab/constants.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/fitkit.hpp"
#include "zetalab/phase.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

namespace {

constexpr int kPhaseBits = 256;

// frac(eta) scaled to 2^256 as an exact integer.
mpz_class scaled_fraction(const BigFloat& eta) {
    BigFloat f = eta.frac();
    f.mul_2exp(kPhaseBits);
    mpz_class h = f.round_to_mpz();
    mpz_class mod = mpz_class(1) << kPhaseBits;
    h %= mod;
    if (h < 0) h += mod;
    return h;
}

}  // namespace

EtaValue::EtaValue(BigFloat value, int certified_digits)
    : value_(std::move(value)), digits_(certified_digits) {
    if (digits_ < 1) throw PrecisionError("EtaValue: needs at least 1 certified digit");
}

EtaValue EtaValue::exp_minus_two_pi_m(int m, int digits) {
    return EtaValue(exp_pi_m(-2 * m, digits), digits);
}

EtaValue EtaValue::frac_exp_two_pi(int digits) {
    // e^{2 pi} ~ 535.49; carve off the integer part, keep the digit budget
    // honest about the 3 digits spent on it.
    BigFloat v = exp_pi_m(2, digits + 5);
    return EtaValue(v.frac(), digits);
}

EtaValue EtaValue::from_rational(long num, long den) {
    if (den == 0) throw std::domain_error("EtaValue: zero denominator");
    const mpfr_prec_t prec = 320;
    BigFloat v = BigFloat::from_si(num, prec) / BigFloat::from_si(den, prec);
    return EtaValue(v, 1000000);  // exact at working precision
}

EtaValue EtaValue::from_double(double v) {
    return EtaValue(BigFloat::from_double(v, 320), 1000000);
}

EtaValue EtaValue::negated() const { return EtaValue(-value_, digits_); }

EtaValue EtaValue::reciprocal() const {
    if (value_.is_zero()) throw std::domain_error("EtaValue: reciprocal of zero");
    BigFloat inv = BigFloat::from_si(1, value_.prec()) / value_;
    // |1/eta| > 1 costs absolute accuracy: drop the digits spent on the
    // integer part of the reciprocal.
    const double mag = std::fabs(inv.to_double());
    const int lost = mag > 1.0 ? static_cast<int>(std::log10(mag)) + 1 : 0;
    return EtaValue(inv, std::max(1, digits_ - lost));
}

EtaValue EtaValue::truncated(int digits) const {
    if (digits < 1 || digits > digits_)
        throw PrecisionError("EtaValue::truncated: invalid digit count");
    // Round the value to `digits` decimals: scale by an exact 10^digits,
    // round, unscale.
    const mpfr_prec_t prec = value_.prec();
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10u, static_cast<unsigned>(digits));
    const BigFloat scale = BigFloat::from_mpz(p10, prec);
    BigFloat v = BigFloat::from_mpz((value_ * scale).round_to_mpz(), prec) / scale;
    return EtaValue(v, digits);
}

void EtaValue::require_digits_for(double x) const {
    const int needed = static_cast<int>(std::ceil(std::log10(std::max(x, 1.0)))) + 13;
    if (digits_ < needed)
        throw PrecisionError("eta carries " + std::to_string(digits_) +
                             " certified digits; phases for x = " + std::to_string(x) +
                             " need >= " + std::to_string(needed));
}

WiltonSumRecord wilton_sum(double x, const EtaValue& eta, const DivisorTable& table) {
    if (!(x >= 1.0)) throw std::domain_error("wilton_sum: x must be >= 1");
    const auto nx = static_cast<std::uint64_t>(std::floor(x));
    if (nx > table.n_max()) throw std::out_of_range("wilton_sum: x > table.n_max");
    eta.require_digits_for(x);

    if (eta.is_negative()) {
        WiltonSumRecord rec = wilton_sum(x, eta.negated(), table);
        rec.value = std::conj(rec.value);
        return rec;
    }

    const mpz_class h = scaled_fraction(eta.value());
    mpz_class acc = 0;
    const mpz_class mod = mpz_class(1) << kPhaseBits;

    Kahan re, im;
    for (std::uint64_t n = 1; n <= nx; ++n) {
        acc += h;
        if (acc >= mod) acc -= mod;
        // top 53+ bits of the fractional turn
        mpz_class top = acc >> (kPhaseBits - 64);
        const double frac = std::ldexp(top.get_d(), -64);
        double s, c;
        sincos_two_pi(frac, s, c);
        const double d = table.d(n);
        re.add(d * c);
        im.add(d * s);
    }

    WiltonSumRecord rec;
    rec.x = x;
    rec.value = {re.sum, im.sum};
    rec.mode = WiltonMode::kFullExponential;
    return rec;
}

double wilton_sine_sum(double x, const EtaValue& eta, const DivisorTable& table) {
    WiltonSumRecord rec = wilton_sum(x, eta, table);
    return rec.value.imag();
}

TransformResidual transform_residual(double x, const EtaValue& eta,
                                     const DivisorTable& table) {
    if (!(x >= 1.0)) throw std::domain_error("transform_residual: x must be >= 1");
    if (eta.is_negative() || eta.value().is_zero())
        throw std::domain_error("transform_residual: eta must be positive");

    // Reduce mod 1 into (0, 1]: an integral eta reduces to 1.
    BigFloat reduced = eta.value().frac();
    if (reduced.is_zero()) reduced = BigFloat::from_si(1, eta.value().prec());
    const EtaValue eta_red(reduced, eta.digits());

    const double eta_d = eta_red.value().to_double();
    const double y = (eta_red.value() * eta_red.value() *
                      BigFloat::from_double(x, eta_red.value().prec()))
                         .to_double();
    if (!(y >= 10.0))
        throw std::domain_error("transform_residual: eta^2 x must be >= 10");
    if (y > static_cast<double>(table.n_max()))
        throw std::out_of_range("transform_residual: eta^2 x > table.n_max");

    const WiltonSumRecord lhs = wilton_sum(x, eta_red, table);
    // D(y, -1/eta) = conj(D(y, 1/eta)) since the coefficients are real.
    const WiltonSumRecord rhs = wilton_sum(y, eta_red.reciprocal(), table);

    TransformResidual out;
    out.residual = lhs.value - std::conj(rhs.value) / eta_d;
    out.ratio = std::abs(out.residual) / (std::sqrt(x) * std::log(x));
    return out;
}

double theorem1_ratio(double x, int m, const DivisorTable& table, double C) {
    if (!(x >= 1e3))
        throw std::domain_error("theorem1_ratio: x must be >= 1e3 (log_3 x > 0)");
    if (!(C > 0.0)) throw std::domain_error("theorem1_ratio: C must be > 0");
    const double ll2 = iterated_log(x, 2);
    const double ll3 = iterated_log(x, 3);
    if (m < 1 || static_cast<double>(m) > ll2 / ll3)
        throw std::domain_error("theorem1_ratio: m outside [1, log_2 x / log_3 x]");

    const int digits = static_cast<int>(std::ceil(std::log10(x))) + 20;
    const EtaValue eta = EtaValue::exp_minus_two_pi_m(m, digits);
    const WiltonSumRecord rec = wilton_sum(x, eta, table);
    const double envelope = x * std::log(x) * std::exp(-C * ll2 / ll3);
    return std::abs(rec.value) / envelope;
}

double bound_312_envelope(double x, int m, int N, const DivisorTable& table,
                          const ContinuedFractionExpansion& cf) {
    (void)table;
    if (cf.m != 2 * m)
        throw std::domain_error("bound_312_envelope: expansion must be for exponent 2m");
    if (N < 1 || N >= cf.certified_len)
        throw PrecisionError("bound_312_envelope: N outside the certified range");
    const double log_x = std::log(x);
    const double a_n = cf.quotients[N].get_d();
    const double branch =
        std::min(a_n * std::sqrt(x) * log_x, std::exp2(-0.5 * N) * x * log_x);
    return std::sqrt(x) * log_x * log_x + branch;
}

EnvelopeScan bound_312_envelope_best(double x, int m, const DivisorTable& table,
                                     const ContinuedFractionExpansion& cf) {
    EnvelopeScan best;
    best.value = std::numeric_limits<double>::infinity();
    for (int N = 1; N < cf.certified_len; ++N) {
        const double v = bound_312_envelope(x, m, N, table, cf);
        if (v < best.value) {
            best.value = v;
            best.argmin_n = N;
        }
    }
    return best;
}

double wilton_exponent_h(double K) {
    if (!(K > 0.0)) throw std::domain_error("wilton_exponent_h: K must be > 0");
    return (4.0 * K + std::log(2.0)) / (4.0 * K + 2.0 * std::log(2.0));
}

}  // namespace zetalab
