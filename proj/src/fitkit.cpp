#include "zetalab/fitkit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace zetalab {

PowerLawFit loglog_slope(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 3 || y.size() != n)
        throw std::invalid_argument("loglog_slope: need >= 3 (x, y) samples");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(y[i] > 0.0)) throw std::invalid_argument("loglog_slope: y must be > 0");
        if (i > 0 && !(x[i] > x[i - 1]))
            throw std::invalid_argument("loglog_slope: x must be strictly increasing");
    }
    if (!(x[0] > 0.0)) throw std::invalid_argument("loglog_slope: x must be > 0");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double nn = static_cast<double>(n);
    const double denom = nn * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("loglog_slope: degenerate abscissae");

    PowerLawFit fit;
    fit.slope = (nn * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.slope * sx) / nn;
    fit.coeff = std::exp(intercept);
    fit.x_lo = x.front();
    fit.x_hi = x.back();
    fit.n_points = static_cast<int>(n);

    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = std::log(y[i]) - (intercept + fit.slope * std::log(x[i]));
        ss_res += r * r;
    }
    const double var = (n > 3) ? ss_res / (nn - 2.0) : ss_res;
    fit.slope_stderr = std::sqrt(var * nn / denom);
    return fit;
}

DyadicEnvelope dyadic_envelope(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n == 0 || y.size() != n)
        throw std::invalid_argument("dyadic_envelope: empty or mismatched input");
    for (std::size_t i = 0; i < n; ++i)
        if (!(x[i] > 0.0)) throw std::invalid_argument("dyadic_envelope: x must be > 0");

    DyadicEnvelope env;
    int j = static_cast<int>(std::floor(std::log2(x[0])));
    double lo = std::ldexp(1.0, j);
    double hi = 2.0 * lo;
    double cur = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        while (x[i] >= hi) {
            if (cur >= 0.0) {
                env.centers.push_back(lo * std::sqrt(2.0));
                env.maxima.push_back(cur);
            }
            lo = hi;
            hi *= 2.0;
            cur = -1.0;
        }
        cur = std::max(cur, std::fabs(y[i]));
    }
    if (cur >= 0.0) {
        env.centers.push_back(lo * std::sqrt(2.0));
        env.maxima.push_back(cur);
    }
    if (env.centers.size() < 2)
        throw std::invalid_argument("dyadic_envelope: need at least two dyadic windows");
    return env;
}

double iterated_log(double x, int j) {
    if (j < 1) throw std::domain_error("iterated_log: j must be >= 1");
    double v = x;
    for (int i = 0; i < j; ++i) {
        if (!(v > 1.0))
            throw std::domain_error("iterated_log: log_" + std::to_string(i) +
                                    " of argument is not > 1");
        v = std::log(v);
    }
    return v;
}

}  // namespace zetalab
