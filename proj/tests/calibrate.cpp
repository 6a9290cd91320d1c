// Development harness: measures the double-precision zeta paths against
// the MPFR oracle to pin the method-split defaults and the error
// envelopes. Not part of the test suite.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "hp_oracle.hpp"
#include "zetalab/mean_square.hpp"
#include "zetalab/wilton.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

static void compare_em(double t) {
    ZetaEvalConfig cfg;
    cfg.em_cutoff = 1e9;  // force Euler-Maclaurin everywhere (capped below)
    cfg.em_cutoff = 999999.0;
    const ZetaPoint p = zeta_half_line(t, cfg);
    const double ref = oracle::zeta_sq(t, 30).to_double();
    std::printf("EM  t=%12.3f  sq=%.15g  ref=%.15g  err=%.3e\n", t, p.sq_modulus, ref,
                std::fabs(p.sq_modulus - ref));
}

static void compare_rs(double t, int terms) {
    const double z = detail::riemann_siegel_z_raw(t, terms);
    const double zref = oracle::z_function(t, 30);
    const double zerr = std::fabs(z - zref);
    std::printf("RS%d t=%12.3f  z=%.12g  zref=%.12g  zerr=%.3e  scaled=%.4f\n", terms,
                t, z, zref, zerr, zerr * std::pow(t, (2.0 * terms + 3.0) / 4.0));
}

int main(int argc, char** argv) {
    if (argc > 1 && std::strcmp(argv[1], "em") == 0) {
        for (double t : {0.0, 0.5, 1.0, 14.134725, 30.0, 100.0, 500.0, 2500.0, 5000.0})
            compare_em(t);
        return 0;
    }
    if (argc > 1 && std::strcmp(argv[1], "rs") == 0) {
        for (int terms = 0; terms <= kMaxRsCorrectionTerms; ++terms)
            for (double t : {50.0, 100.0, 200.0, 500.0, 1000.0, 2500.0, 5000.0,
                             10000.0, 20000.0, 50000.0, 100000.0})
                compare_rs(t, terms);
        return 0;
    }
    if (argc > 1 && std::strcmp(argv[1], "env") == 0) {
        // Dense sweep per terms count: report max zerr * t^{(2K+3)/4}.
        for (int terms = 0; terms <= kMaxRsCorrectionTerms; ++terms) {
            double worst = 0.0, worst_t = 0.0;
            for (double t = 50.0; t <= 100000.0; t *= 1.03) {
                const double z = detail::riemann_siegel_z_raw(t, terms);
                const double zref = oracle::z_function(t, 25);
                const double zerr = std::fabs(z - zref);
                const double scaled = zerr * std::pow(t, (2.0 * terms + 3.0) / 4.0);
                if (scaled > worst) {
                    worst = scaled;
                    worst_t = t;
                }
            }
            std::printf("terms=%d  max zerr*t^{(2K+3)/4} = %.5f at t=%.1f\n", terms,
                        worst, worst_t);
        }
        return 0;
    }
    if (argc > 1 && std::strcmp(argv[1], "disp") == 0) {
        // Default-config dispatcher accuracy on a log-uniform grid.
        ZetaEvalConfig cfg;
        double worst = 0.0, worst_t = 0.0;
        int n_em = 0, n_rs = 0;
        for (double t = 10.0; t <= 100000.0; t *= 1.045) {
            const ZetaPoint p = zeta_half_line(t, cfg);
            const double ref = oracle::zeta_sq(t, 25).to_double();
            const double err = std::fabs(p.sq_modulus - ref);
            if (err > worst) {
                worst = err;
                worst_t = t;
            }
            (t <= cfg.em_cutoff) ? ++n_em : ++n_rs;
        }
        std::printf("dispatcher max |sq err| = %.3e at t=%.1f (em<=%d rs~%d pts)\n",
                    worst, worst_t, n_em, n_rs);
        return 0;
    }
    if (argc > 1 && std::strcmp(argv[1], "table") == 0) {
        const double x_max = argc > 2 ? std::atof(argv[2]) : 2000.0;
        ZetaEvalConfig cfg;
        const auto t0 = std::chrono::steady_clock::now();
        const ErrorTermTable table = build_table(x_max, cfg, 1e-6, nullptr, 0.5, 2);
        const auto t1 = std::chrono::steady_clock::now();
        std::printf("table x_max=%g built in %.1f s, %zu samples\n", x_max,
                    std::chrono::duration<double>(t1 - t0).count(), table.size());
        std::printf("E(%g) = %.10g   cumE = %.10g   cumPsi = %.10g\n", x_max,
                    table.e_values().back(), table.cum_e_integral().back(),
                    table.cum_psi_zeta().back());
        const double T = std::min(x_max, 50.0);
        std::printf("e_of(%g) = %.12g  oracle = %.12g\n", T,
                    e_of(T, cfg, 1e-8, 2), oracle::e_of(T, 28));
        return 0;
    }
    if (argc > 1 && std::strcmp(argv[1], "wilton") == 0) {
        const auto table = DivisorTable::sieve(40000);
        const EtaValue eta = EtaValue::frac_exp_two_pi(60);
        std::printf("eta = frac(e^{2pi}) = %.15f\n", eta.value().to_double());
        for (double x : {1000.0, 3000.0, 10000.0, 30000.0}) {
            const TransformResidual tr = transform_residual(x, eta, table);
            const WiltonSumRecord d = wilton_sum(x, eta, table);
            std::printf("x=%7.0f  |D|=%10.3f  residual=(%9.3f, %9.3f)  ratio=%.4f\n",
                        x, std::abs(d.value), tr.residual.real(), tr.residual.imag(),
                        tr.ratio);
        }
        const auto t2 = DivisorTable::sieve(100000);
        for (double x : {1000.0, 10000.0, 100000.0}) {
            const int digits = 25;
            const EtaValue em1 = EtaValue::exp_minus_two_pi_m(1, digits);
            const WiltonSumRecord d = wilton_sum(x, em1, t2);
            std::printf("m=1 x=%7.0f  |D|=%12.3f  |D|/(x log x) = %.6f\n", x,
                        std::abs(d.value), std::abs(d.value) / (x * std::log(x)));
        }
        return 0;
    }
    std::printf("usage: calibrate em|rs|env|disp|table|wilton\n");
    return 1;
}
