#include "zetalab/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "zetalab/divisor.hpp"
#include "zetalab/errors.hpp"

namespace zetalab {

const GaussLegendre& GaussLegendre::order8() {
    static const GaussLegendre g = [] {
        // Newton on the Legendre recurrence, as usual.
        const int n = 8;
        GaussLegendre gl;
        gl.x.assign(n, 0.0);
        gl.w.assign(n, 0.0);
        for (int i = 0; i < n / 2; ++i) {
            double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double p1 = 0, p2 = 0, pp = 0;
            for (int it = 0; it < 100; ++it) {
                p1 = 1.0;
                p2 = 0.0;
                for (int j = 1; j <= n; ++j) {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
                }
                pp = n * (z * p1 - p2) / (z * z - 1.0);
                const double dz = p1 / pp;
                z -= dz;
                if (std::fabs(dz) < 1e-16) break;
            }
            gl.x[i] = -z;
            gl.x[n - 1 - i] = z;
            gl.w[i] = gl.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
        return gl;
    }();
    return g;
}

namespace {

GapIntegrals gap_pass(const Integrand& f, double a, double b, int m) {
    const GaussLegendre& gl = GaussLegendre::order8();
    const double h = (b - a) / m;
    // psi is linear inside the gap (no interior integer); anchor its floor
    // at the midpoint so panel edges that sit exactly on integers are safe.
    const double fl = std::floor(0.5 * (a + b));
    GapIntegrals out;
    Kahan plain, psiw, upper;
    for (int i = 0; i < m; ++i) {
        const double lo = a + i * h;
        const double mid = lo + 0.5 * h;
        const double half = 0.5 * h;
        for (std::size_t k = 0; k < gl.x.size(); ++k) {
            const double t = mid + half * gl.x[k];
            const double v = f(t);
            const double wv = gl.w[k] * half * v;
            plain.add(wv);
            psiw.add(wv * (t - fl - 0.5));
            upper.add(wv * (b - t));
        }
    }
    out.plain = plain.sum;
    out.psi_weighted = psiw.sum;
    out.upper_moment = upper.sum;
    return out;
}

}  // namespace

GapIntegrals integrate_gap(const Integrand& f, double a, double b, double tol,
                           double density, int max_doublings) {
    if (!(b > a)) return {};
    int m = std::max(1, static_cast<int>(std::ceil((b - a) * std::log(2.0 + b) / density)));
    GapIntegrals coarse = gap_pass(f, a, b, m);
    for (int depth = 0; depth <= max_doublings; ++depth) {
        const GapIntegrals fine = gap_pass(f, a, b, 2 * m);
        const double diff =
            std::max({std::fabs(fine.plain - coarse.plain),
                      std::fabs(fine.psi_weighted - coarse.psi_weighted),
                      std::fabs(fine.upper_moment - coarse.upper_moment)});
        if (diff <= tol) return fine;
        coarse = fine;
        m *= 2;
    }
    throw ToleranceError("integrate_gap: panel-depth limit reached before tolerance");
}

std::vector<double> sample_grid(double x_max, double step) {
    std::vector<double> breaks;
    breaks.reserve(static_cast<std::size_t>(x_max) + 1);
    for (double n = 1.0; n < x_max; n += 1.0) breaks.push_back(n);
    return sample_grid_with_breaks(0.0, x_max, step, breaks);
}

std::vector<double> sample_grid_with_breaks(double lo, double hi, double step,
                                            std::span<const double> breaks) {
    if (!(step > 0.0)) throw std::invalid_argument("sample_grid: step must be > 0");
    if (!(hi > lo)) throw std::invalid_argument("sample_grid: empty range");
    constexpr double kSnap = 1e-9;

    // Breakpoints are authoritative grid members; step multiples that land
    // within kSnap of one are dropped so breaks keep their exact values.
    auto near_break = [&](double t) {
        auto it = std::lower_bound(breaks.begin(), breaks.end(), t);
        if (it != breaks.end() && std::fabs(*it - t) < kSnap) return true;
        if (it != breaks.begin() && std::fabs(*std::prev(it) - t) < kSnap) return true;
        return false;
    };

    std::vector<double> grid;
    grid.push_back(lo);
    for (std::size_t k = 1;; ++k) {
        const double t = lo + static_cast<double>(k) * step;
        if (t >= hi - kSnap) break;
        if (!near_break(t)) grid.push_back(t);
    }
    for (double b : breaks)
        if (b > lo + kSnap && b < hi - kSnap) grid.push_back(b);
    grid.push_back(hi);
    std::sort(grid.begin(), grid.end());
    return grid;
}

int effective_workers(int requested) {
    if (requested > 0) return std::min(requested, 64);
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

std::vector<GapIntegrals> sweep_gaps(const Integrand& f,
                                     std::span<const double> grid, double tol,
                                     int workers) {
    if (grid.size() < 2) return {};
    const std::size_t n_gaps = grid.size() - 1;
    const double span = grid.back() - grid.front();
    std::vector<GapIntegrals> values(n_gaps);

    const int n_threads = std::min<std::size_t>(effective_workers(workers), n_gaps);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto work = [&] {
        constexpr std::size_t kBlock = 32;
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t begin = next.fetch_add(kBlock);
            if (begin >= n_gaps) break;
            const std::size_t end = std::min(begin + kBlock, n_gaps);
            for (std::size_t i = begin; i < end; ++i) {
                const double a = grid[i], b = grid[i + 1];
                const double gap_tol = tol * (b - a) / span;
                try {
                    values[i] = integrate_gap(f, a, b, gap_tol);
                } catch (...) {
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        }
    };

    if (n_threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (failed.load())
        throw ToleranceError("sweep_gaps: a gap failed to reach its tolerance");
    return values;
}

}  // namespace zetalab
