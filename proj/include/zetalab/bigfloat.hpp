#pragma once

// Thin RAII wrapper over MPFR reals. Each value carries its own precision;
// binary operations round to the wider operand. Only the operations the
// project actually uses are wrapped.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace zetalab {

class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec_bits = 128) { mpfr_init2(v_, prec_bits); mpfr_set_zero(v_, 1); }

    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static mpfr_prec_t bits_for_digits(int decimal_digits);

    static BigFloat from_double(double x, mpfr_prec_t prec = 128);
    static BigFloat from_si(long x, mpfr_prec_t prec = 128);
    static BigFloat from_mpz(const mpz_class& z, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    // Arithmetic (result precision = max of operand precisions).
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    BigFloat& mul_si(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
    BigFloat& div_si(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }
    BigFloat& mul_2exp(long e) { mpfr_mul_2si(v_, v_, e, MPFR_RNDN); return *this; }

    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat exp() const;
    BigFloat log() const;
    void sin_cos(BigFloat& s, BigFloat& c) const;
    static BigFloat atan2(const BigFloat& y, const BigFloat& x);

    mpz_class floor_to_mpz() const;
    mpz_class round_to_mpz() const;
    BigFloat frac() const;  // x - floor(x)

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(double d) const { return mpfr_cmp_d(v_, d); }
    int cmp_ui(unsigned long u) const { return mpfr_cmp_ui(v_, u); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    std::string to_string(int digits) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
};

}  // namespace zetalab
