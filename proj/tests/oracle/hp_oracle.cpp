#include "hp_oracle.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace zetalab::oracle {

namespace {

mpfr_prec_t prec_for(int digits) { return BigFloat::bits_for_digits(digits) + 32; }

HpComplex cmul(const HpComplex& a, const HpComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

HpComplex cdiv(const HpComplex& a, const HpComplex& b) {
    BigFloat den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

HpComplex cadd(const HpComplex& a, const HpComplex& b) { return {a.re + b.re, a.im + b.im}; }

BigFloat cnorm(const HpComplex& a) { return a.re * a.re + a.im * a.im; }

// B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}
BigFloat bernoulli_over_fact(int k, mpfr_prec_t prec) {
    BigFloat z(prec);
    mpfr_zeta_ui(z.raw(), static_cast<unsigned>(2 * k), MPFR_RNDN);
    BigFloat tp = BigFloat::pi(prec);
    tp.mul_si(2);
    BigFloat denom = BigFloat::from_si(1, prec);
    for (int i = 0; i < 2 * k; ++i) denom *= tp;
    BigFloat r = z / denom;
    r.mul_si((k & 1) ? 2 : -2);
    return r;
}

}  // namespace

HpComplex zeta(double t, int digits) {
    const mpfr_prec_t prec = prec_for(digits);
    const long N = static_cast<long>(std::ceil(0.35 * std::fabs(t))) + 30;

    const BigFloat tb = BigFloat::from_double(t, prec);
    const HpComplex s{BigFloat::from_double(0.5, prec), tb};

    HpComplex acc{BigFloat(prec), BigFloat(prec)};
    BigFloat ln(prec), mag(prec), phi(prec), si(prec), co(prec);
    for (long n = 1; n < N; ++n) {
        mpfr_log_ui(ln.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_sqrt_ui(mag.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_ui_div(mag.raw(), 1ul, mag.raw(), MPFR_RNDN);  // n^{-1/2}
        phi = tb * ln;
        mpfr_neg(phi.raw(), phi.raw(), MPFR_RNDN);
        phi.sin_cos(si, co);
        acc.re += mag * co;
        acc.im += mag * si;
    }

    // Boundary terms with N^{-s} = N^{-1/2} e^{-i t ln N}.
    mpfr_log_ui(ln.raw(), static_cast<unsigned long>(N), MPFR_RNDN);
    mpfr_sqrt_ui(mag.raw(), static_cast<unsigned long>(N), MPFR_RNDN);
    phi = tb * ln;
    mpfr_neg(phi.raw(), phi.raw(), MPFR_RNDN);
    phi.sin_cos(si, co);
    BigFloat inv_mag = BigFloat::from_si(1, prec) / mag;
    HpComplex n_pow_ms{inv_mag * co, inv_mag * si};   // N^{-s}
    HpComplex n_pow_1ms{mag * co, mag * si};          // N^{1-s}

    HpComplex s_minus_1{s.re - BigFloat::from_si(1, prec), s.im};
    acc = cadd(acc, cdiv(n_pow_1ms, s_minus_1));
    acc.re += n_pow_ms.re * BigFloat::from_double(0.5, prec);
    acc.im += n_pow_ms.im * BigFloat::from_double(0.5, prec);

    // Bernoulli tail: r_1 = s N^{-s-1}; r_{k+1} = r_k (s+2k-1)(s+2k) / N^2.
    BigFloat invN = BigFloat::from_si(1, prec);
    invN.div_si(N);
    HpComplex r = cmul(s, n_pow_ms);
    r.re *= invN;
    r.im *= invN;
    BigFloat invN2 = invN * invN;
    const BigFloat eps_scale = [&] {
        BigFloat e = BigFloat::from_si(1, prec);
        e.mul_2exp(-static_cast<long>(prec) - 16);
        return e;
    }();
    for (int k = 1; k <= 120; ++k) {
        BigFloat b = bernoulli_over_fact(k, prec);
        HpComplex term{b * r.re, b * r.im};
        acc = cadd(acc, term);
        if (cnorm(term).cmp(eps_scale * eps_scale) < 0) break;
        HpComplex f1{s.re + BigFloat::from_si(2 * k - 1, prec), s.im};
        HpComplex f2{s.re + BigFloat::from_si(2 * k, prec), s.im};
        r = cmul(r, cmul(f1, f2));
        r.re *= invN2;
        r.im *= invN2;
    }
    return acc;
}

BigFloat zeta_sq(double t, int digits) {
    HpComplex z = zeta(t, digits);
    return cnorm(z);
}

BigFloat theta(double t, int digits) {
    if (!(t > 0.0)) throw std::domain_error("oracle::theta: t must be > 0");
    const mpfr_prec_t prec = prec_for(digits + 10);

    // z = 1/4 + i t/2, shifted up until |z| is large enough for Stirling.
    const double target = 0.3665 * (digits + 12) + 8.0;
    const long shifts =
        (t / 2.0 >= target) ? 0 : static_cast<long>(std::ceil(target));

    HpComplex z{BigFloat::from_double(0.25, prec), BigFloat::from_double(t / 2.0, prec)};

    // log Gamma(z) = log Gamma(z + M) - sum_{j=0}^{M-1} log(z + j)
    HpComplex log_prod{BigFloat(prec), BigFloat(prec)};
    for (long j = 0; j < shifts; ++j) {
        HpComplex zj{z.re + BigFloat::from_si(j, prec), z.im};
        BigFloat n2 = cnorm(zj);
        log_prod.re += n2.log() * BigFloat::from_double(0.5, prec);
        log_prod.im += BigFloat::atan2(zj.im, zj.re);
    }
    HpComplex zs{z.re + BigFloat::from_si(shifts, prec), z.im};

    // Stirling: (zs - 1/2) log zs - zs + log(2 pi)/2 + sum B_{2k}/(2k(2k-1) zs^{2k-1})
    BigFloat lz_re = cnorm(zs).log();
    lz_re *= BigFloat::from_double(0.5, prec);
    BigFloat lz_im = BigFloat::atan2(zs.im, zs.re);
    HpComplex log_zs{lz_re, lz_im};

    HpComplex zm{zs.re - BigFloat::from_double(0.5, prec), zs.im};
    HpComplex acc = cmul(zm, log_zs);
    acc.re -= zs.re;
    acc.im -= zs.im;
    BigFloat two_pi = BigFloat::pi(prec);
    two_pi.mul_si(2);
    acc.re += two_pi.log() * BigFloat::from_double(0.5, prec);

    HpComplex inv_zs = cdiv({BigFloat::from_si(1, prec), BigFloat(prec)}, zs);
    HpComplex inv_zs2 = cmul(inv_zs, inv_zs);
    HpComplex pw = inv_zs;  // zs^{-(2k-1)}
    BigFloat fact = BigFloat::from_si(1, prec);
    BigFloat best = BigFloat::from_double(1e308, prec);
    for (int k = 1; k <= 300; ++k) {
        // B_{2k}/(2k(2k-1)) = B_{2k}/(2k)! * (2k-2)!
        BigFloat coef = bernoulli_over_fact(k, prec) * fact;
        HpComplex term{coef * pw.re, coef * pw.im};
        BigFloat tn = cnorm(term);
        if (tn.cmp(best) > 0) break;  // asymptotic series started diverging
        best = tn;
        acc = cadd(acc, term);
        BigFloat eps = BigFloat::from_si(1, prec);
        eps.mul_2exp(-static_cast<long>(prec) - 8);
        if (tn.cmp(eps * eps) < 0) break;
        pw = cmul(pw, inv_zs2);
        // (2k)! / (2k+2-2)! update: fact *= (2k)(2k+1) ... we need (2(k+1)-2)! = (2k)!
        fact *= BigFloat::from_si(2 * k - 1, prec) * BigFloat::from_si(2 * k, prec) /
                (BigFloat::from_si(1, prec));
        // fact currently (2k)!; for next k it must be (2k)! -- done.
    }

    BigFloat im_lgamma = acc.im - log_prod.im;

    BigFloat pi_v = BigFloat::pi(prec);
    BigFloat half_t = BigFloat::from_double(t, prec);
    half_t.div_si(2);
    return im_lgamma - half_t * pi_v.log();
}

double z_function(double t, int digits) {
    const mpfr_prec_t prec = prec_for(digits);
    HpComplex zv = zeta(t, digits);
    BigFloat th = theta(t, digits);
    BigFloat si(prec), co(prec);
    th.sin_cos(si, co);
    BigFloat z = co * zv.re - si * zv.im;
    return z.to_double();
}

namespace {

struct GaussNodes {
    std::vector<BigFloat> x, w;  // on [-1, 1]
};

const GaussNodes& gauss24(mpfr_prec_t prec) {
    static GaussNodes nodes = [] {
        const mpfr_prec_t p = 512;
        const int n = 24;
        GaussNodes g;
        g.x.resize(n, BigFloat(p));
        g.w.resize(n, BigFloat(p));
        for (int i = 0; i < n / 2; ++i) {
            // Newton from the classical cosine initial guess.
            BigFloat z = BigFloat::from_double(
                std::cos(M_PI * (i + 0.75) / (n + 0.5)), p);
            BigFloat p1(p), p2(p), p3(p), pp(p);
            for (int it = 0; it < 80; ++it) {
                p1 = BigFloat::from_si(1, p);
                p2 = BigFloat(p);
                for (int j = 1; j <= n; ++j) {
                    p3 = p2;
                    p2 = p1;
                    BigFloat a = z * p2;
                    a.mul_si(2 * j - 1);
                    BigFloat b = p3;
                    b.mul_si(j - 1);
                    p1 = (a - b);
                    p1.div_si(j);
                }
                // P'(z) = n (z P(z) - P_{n-1}(z)) / (z^2 - 1)
                BigFloat zz = z * z - BigFloat::from_si(1, p);
                pp = (z * p1 - p2);
                pp.mul_si(n);
                pp /= zz;
                BigFloat dz = p1 / pp;
                z -= dz;
                BigFloat adz = dz.abs();
                BigFloat eps = BigFloat::from_si(1, p);
                eps.mul_2exp(-480);
                if (adz.cmp(eps) < 0) break;
            }
            g.x[i] = -z;
            g.x[n - 1 - i] = z;
            BigFloat zz = BigFloat::from_si(1, p) - z * z;
            BigFloat w = BigFloat::from_si(2, p) / (zz * pp * pp);
            g.w[i] = w;
            g.w[n - 1 - i] = w;
        }
        return g;
    }();
    (void)prec;
    return nodes;
}

enum class Weight { kOne, kPsi };

BigFloat panel_gl24(double a, double b, int digits, Weight weight) {
    const mpfr_prec_t prec = prec_for(digits);
    const auto& g = gauss24(prec);
    BigFloat fa = BigFloat::from_double(a, prec);
    BigFloat fb = BigFloat::from_double(b, prec);
    BigFloat mid = (fa + fb), half = (fb - fa);
    mid.div_si(2);
    half.div_si(2);
    BigFloat acc(prec);
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        BigFloat tt = mid + half * g.x[i];
        const double td = tt.to_double();
        BigFloat f = zeta_sq(td, digits);
        if (weight == Weight::kPsi) {
            // psi(t) = t - floor(t) - 1/2, evaluated on the panel's interior
            BigFloat fr = tt.frac();
            fr -= BigFloat::from_double(0.5, prec);
            f *= fr;
        }
        acc += g.w[i] * f;
    }
    return acc * half;
}

double adaptive(double a, double b, int digits, Weight weight, int depth) {
    BigFloat whole = panel_gl24(a, b, digits, weight);
    const double m = 0.5 * (a + b);
    BigFloat halves = panel_gl24(a, m, digits, weight) + panel_gl24(m, b, digits, weight);
    BigFloat diff = (whole - halves).abs();
    const double tol = std::max(1e-30, 1e-28 * (b - a));
    if (diff.to_double() < tol || depth >= 26) return halves.to_double();
    return adaptive(a, m, digits, weight, depth + 1) +
           adaptive(m, b, digits, weight, depth + 1);
}

double integrate(double a, double b, int digits, Weight weight) {
    if (!(b >= a)) throw std::invalid_argument("oracle::integrate: b < a");
    double total = 0.0;
    double lo = a;
    while (lo < b) {
        double hi = std::min(b, std::floor(lo) + 1.0);  // split at integers
        if (hi <= lo) hi = std::min(b, lo + 1.0);
        double seg_lo = lo;
        while (seg_lo < hi) {
            const double seg_hi = std::min(hi, seg_lo + 0.25);
            total += adaptive(seg_lo, seg_hi, digits, weight, 0);
            seg_lo = seg_hi;
        }
        lo = hi;
    }
    return total;
}

}  // namespace

double integrate_zeta_sq(double a, double b, int digits) {
    return integrate(a, b, digits, Weight::kOne);
}

double integrate_psi_zeta_sq(double a, double b, int digits) {
    return integrate(a, b, digits, Weight::kPsi);
}

double main_term(double T, int digits) {
    if (T <= 0.0) return 0.0;
    const mpfr_prec_t prec = prec_for(digits);
    BigFloat t = BigFloat::from_double(T, prec);
    BigFloat two_pi = BigFloat::pi(prec);
    two_pi.mul_si(2);
    BigFloat gamma(prec);
    mpfr_const_euler(gamma.raw(), MPFR_RNDN);
    BigFloat v = (t / two_pi).log() + gamma + gamma - BigFloat::from_si(1, prec);
    return (t * v).to_double();
}

double e_of(double T, int digits) {
    return integrate_zeta_sq(0.0, T, digits) - main_term(T, digits);
}

double afe_sum(double t, int digits, const DivisorTable& table) {
    const mpfr_prec_t prec = prec_for(digits);
    const BigFloat tb = BigFloat::from_double(t, prec);
    BigFloat two_pi = BigFloat::pi(prec);
    two_pi.mul_si(2);
    const auto cutoff = static_cast<std::uint64_t>(t / (2.0 * M_PI));
    if (cutoff > table.n_max())
        throw std::out_of_range("oracle::afe_sum: divisor table too small");

    BigFloat acc(prec);
    BigFloat pi_4 = BigFloat::pi(prec);
    pi_4.div_si(4);
    BigFloat si(prec), co(prec);
    for (std::uint64_t n = 1; n <= cutoff; ++n) {
        BigFloat ln(prec);
        mpfr_log_ui(ln.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
        BigFloat arg = tb * ((tb / two_pi).log() - ln) - tb - pi_4;
        arg.sin_cos(si, co);
        BigFloat mag(prec);
        mpfr_sqrt_ui(mag.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_ui_div(mag.raw(), 1ul, mag.raw(), MPFR_RNDN);
        mag.mul_si(2 * static_cast<long>(table.d(n)));
        acc += mag * co;
    }
    return acc.to_double();
}

}  // namespace zetalab::oracle
