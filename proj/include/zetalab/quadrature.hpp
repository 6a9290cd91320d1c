#pragma once

// Shared oscillatory-quadrature machinery: fixed-order Gauss-Legendre
// panels with spacing tied to the local zero gap of |zeta(1/2+it)|^2,
// halved adaptively on disagreement. Gap values may be computed by many
// workers; accumulation is always a single sequential pass in index order
// with compensated summation, so results are independent of worker count.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace zetalab {

struct GaussLegendre {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
    static const GaussLegendre& order8();
};

// Triple of integrals over one gap, all driven by a single f(t) evaluation
// per node: (int f, int psi(t) f, int (b - t) f). The third accumulator
// turns the nested integral of E into a closed form per gap.
struct GapIntegrals {
    double plain = 0.0;
    double psi_weighted = 0.0;
    double upper_moment = 0.0;
};

using Integrand = std::function<double(double)>;

// Integrate one gap [a, b] that contains no integer in its interior.
// Sub-panel spacing starts at density/log(2 + b) and doubles in count until
// two consecutive subdivisions agree within tol (ToleranceError past the
// depth limit).
GapIntegrals integrate_gap(const Integrand& f, double a, double b, double tol,
                           double density = 0.25, int max_doublings = 12);

// Strictly increasing grid over [0, x_max]: multiples of `step` merged with
// every integer (so the sawtooth jump never falls inside a gap) and x_max.
std::vector<double> sample_grid(double x_max, double step);

// As sample_grid but with caller-provided mandatory breakpoints instead of
// the integers, over [lo, hi].
std::vector<double> sample_grid_with_breaks(double lo, double hi, double step,
                                            std::span<const double> breaks);

// Compute per-gap integrals for consecutive grid points, in parallel.
// tol is the total budget, allocated to gaps proportionally to width.
std::vector<GapIntegrals> sweep_gaps(const Integrand& f,
                                     std::span<const double> grid, double tol,
                                     int workers);

// Number of workers to use: requested if > 0, else hardware concurrency.
int effective_workers(int requested);

// Kahan-compensated accumulator for the sequential prefix passes.
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace zetalab
