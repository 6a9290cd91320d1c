#include "zetalab/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace zetalab {

mpfr_prec_t BigFloat::bits_for_digits(int decimal_digits) {
    // log2(10) = 3.3219...; headroom for intermediate rounding.
    return static_cast<mpfr_prec_t>(decimal_digits * 3.3220) + 64;
}

BigFloat BigFloat::from_double(double x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_si(long x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_mpz(const mpz_class& z, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

static mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(prec());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log() const {
    BigFloat r(prec());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

void BigFloat::sin_cos(BigFloat& s, BigFloat& c) const {
    mpfr_set_prec(s.v_, prec());
    mpfr_set_prec(c.v_, prec());
    mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
}

BigFloat BigFloat::atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(joint(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

mpz_class BigFloat::floor_to_mpz() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
}

mpz_class BigFloat::round_to_mpz() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

BigFloat BigFloat::frac() const {
    BigFloat f(prec());
    mpfr_t fl;
    mpfr_init2(fl, prec());
    mpfr_floor(fl, v_);
    mpfr_sub(f.v_, v_, fl, MPFR_RNDN);
    mpfr_clear(fl);
    return f;
}

std::string BigFloat::to_string(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
    char* out = nullptr;
    if (mpfr_asprintf(&out, fmt, v_) < 0) return "<mpfr-error>";
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

}  // namespace zetalab
