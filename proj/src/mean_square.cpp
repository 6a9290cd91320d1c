#include "zetalab/mean_square.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

#include "zetalab/constants.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

namespace {

constexpr const char* kMethodVersion = "gl8-fubini-1";

long double main_term_l(long double T) {
    if (T <= 0.0L) return 0.0L;
    return T * (std::log(T / kTwoPiL) + 2.0L * kEulerGammaL - 1.0L);
}

// Antiderivative of the main term: int_0^t u (log(u/2pi) + 2 gamma - 1) du.
long double main_term_integral(long double t) {
    if (t <= 0.0L) return 0.0L;
    const long double t2 = t * t;
    return 0.5L * t2 * std::log(t / kTwoPiL) - 0.25L * t2 +
           0.5L * (2.0L * kEulerGammaL - 1.0L) * t2;
}

Integrand zeta_sq_integrand(const ZetaEvalConfig& cfg) {
    return [cfg](double t) { return zeta_half_line(t, cfg).sq_modulus; };
}

}  // namespace

double main_term(double T) {
    if (!(T >= 0.0)) throw std::domain_error("main_term: T must be >= 0");
    return static_cast<double>(main_term_l(static_cast<long double>(T)));
}

double e_of(double T, const ZetaEvalConfig& cfg, double tol, int workers) {
    cfg.validate();
    if (!(T >= 0.0)) throw std::domain_error("e_of: T must be >= 0");
    if (T > kSupportedTMax) throw std::out_of_range("e_of: T exceeds the supported range");
    if (T == 0.0) return 0.0;

    const auto grid = sample_grid(T, 0.5);
    const auto gaps = sweep_gaps(zeta_sq_integrand(cfg), grid, tol, workers);
    Kahan acc;
    for (const auto& g : gaps) acc.add(g.plain);
    return static_cast<double>(acc.sum - main_term_l(static_cast<long double>(T)));
}

std::size_t ErrorTermTable::index_at(double x) const {
    if (!(x >= 0.0) || x > x_max_)
        throw std::out_of_range("ErrorTermTable: x outside [0, x_max]");
    auto it = std::upper_bound(t_.begin(), t_.end(), x);
    return static_cast<std::size_t>(it - t_.begin()) - 1;
}

double ErrorTermTable::e_at_integer(std::uint64_t n) const {
    const double x = static_cast<double>(n);
    const std::size_t i = index_at(x);
    if (t_[i] != x)
        throw std::out_of_range("ErrorTermTable: integer sample missing (n > x_max?)");
    return e_[i];
}

double ErrorTermTable::e_at(double x) const {
    const std::size_t i = index_at(x);
    if (t_[i] == x) return e_[i];
    const GapIntegrals part = integrate_gap(zeta_sq_integrand(cfg_), t_[i], x,
                                            tol_ * (x - t_[i]) / x_max_);
    const long double i1 = static_cast<long double>(e_[i]) +
                           main_term_l(static_cast<long double>(t_[i]));
    return static_cast<double>(i1 + part.plain - main_term_l(static_cast<long double>(x)));
}

double ErrorTermTable::cum_e_at(double x) const {
    const std::size_t i = index_at(x);
    if (t_[i] == x) return cum_e_[i];
    const GapIntegrals part = integrate_gap(zeta_sq_integrand(cfg_), t_[i], x,
                                            tol_ * (x - t_[i]) / x_max_);
    const long double i1 = static_cast<long double>(e_[i]) +
                           main_term_l(static_cast<long double>(t_[i]));
    const long double gap_e =
        (static_cast<long double>(x) - t_[i]) * i1 + part.upper_moment -
        (main_term_integral(static_cast<long double>(x)) -
         main_term_integral(static_cast<long double>(t_[i])));
    return static_cast<double>(cum_e_[i] + gap_e);
}

double ErrorTermTable::cum_psi_at(double x) const {
    const std::size_t i = index_at(x);
    if (t_[i] == x) return cum_psi_[i];
    const GapIntegrals part = integrate_gap(zeta_sq_integrand(cfg_), t_[i], x,
                                            tol_ * (x - t_[i]) / x_max_);
    return cum_psi_[i] + part.psi_weighted;
}

std::string ErrorTermTable::param_key() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "etable|xmax=%.17g|step=%.17g|tol=%.17g|em=%.17g|rs=%d|tae=%.17g|mv=%s",
                  x_max_, step_, tol_, cfg_.em_cutoff, cfg_.rs_correction_terms,
                  cfg_.target_abs_err, method_version_.c_str());
    return buf;
}

std::vector<std::uint8_t> ErrorTermTable::serialize() const {
    std::vector<std::uint8_t> out;
    auto pod = [&out](const auto& v) {
        const auto* p = reinterpret_cast<const std::uint8_t*>(&v);
        out.insert(out.end(), p, p + sizeof(v));
    };
    pod(x_max_);
    pod(step_);
    pod(tol_);
    pod(cfg_.em_cutoff);
    pod(cfg_.target_abs_err);
    pod(static_cast<std::int32_t>(cfg_.rs_correction_terms));
    pod(static_cast<std::uint32_t>(method_version_.size()));
    out.insert(out.end(), method_version_.begin(), method_version_.end());
    pod(static_cast<std::uint64_t>(t_.size()));
    auto arr = [&out](const std::vector<double>& v) {
        const auto* p = reinterpret_cast<const std::uint8_t*>(v.data());
        out.insert(out.end(), p, p + v.size() * sizeof(double));
    };
    arr(t_);
    arr(e_);
    arr(cum_e_);
    arr(cum_psi_);
    return out;
}

std::optional<ErrorTermTable> ErrorTermTable::deserialize(
    std::span<const std::uint8_t> bytes) {
    std::size_t off = 0;
    auto pod = [&](auto& v) -> bool {
        if (off + sizeof(v) > bytes.size()) return false;
        std::memcpy(&v, bytes.data() + off, sizeof(v));
        off += sizeof(v);
        return true;
    };
    ErrorTermTable t;
    std::int32_t rs = 0;
    std::uint32_t mv_len = 0;
    if (!pod(t.x_max_) || !pod(t.step_) || !pod(t.tol_) || !pod(t.cfg_.em_cutoff) ||
        !pod(t.cfg_.target_abs_err) || !pod(rs) || !pod(mv_len))
        return std::nullopt;
    t.cfg_.rs_correction_terms = rs;
    if (off + mv_len > bytes.size() || mv_len > 64) return std::nullopt;
    t.method_version_.assign(reinterpret_cast<const char*>(bytes.data() + off), mv_len);
    off += mv_len;
    std::uint64_t count = 0;
    if (!pod(count)) return std::nullopt;
    if (off + 4 * count * sizeof(double) != bytes.size()) return std::nullopt;
    auto arr = [&](std::vector<double>& v) {
        v.resize(count);
        std::memcpy(v.data(), bytes.data() + off, count * sizeof(double));
        off += count * sizeof(double);
    };
    arr(t.t_);
    arr(t.e_);
    arr(t.cum_e_);
    arr(t.cum_psi_);
    if (count == 0 || t.t_.front() != 0.0 || t.t_.back() != t.x_max_) return std::nullopt;
    for (std::size_t i = 1; i < count; ++i)
        if (!(t.t_[i] > t.t_[i - 1])) return std::nullopt;
    return t;
}

ErrorTermTable build_table(double x_max, const ZetaEvalConfig& cfg, double tol,
                           CacheStore* cache, double step, int workers) {
    cfg.validate();
    if (!(x_max >= 1.0)) throw std::domain_error("build_table: x_max must be >= 1");
    if (x_max > kSupportedTMax)
        throw std::out_of_range("build_table: x_max exceeds the supported range");
    if (!(tol > 0.0)) throw std::domain_error("build_table: tol must be > 0");

    ErrorTermTable probe;
    probe.x_max_ = x_max;
    probe.step_ = step;
    probe.tol_ = tol;
    probe.cfg_ = cfg;
    probe.method_version_ = kMethodVersion;
    const std::string key = probe.param_key();

    if (cache) {
        if (auto payload = cache->get("etable", key)) {
            if (auto table = ErrorTermTable::deserialize(*payload)) return *std::move(table);
            // checksum passed but the payload is inconsistent: recompute
        }
    }

    ErrorTermTable table = std::move(probe);
    const auto grid = sample_grid(x_max, step);
    const auto gaps = sweep_gaps(zeta_sq_integrand(cfg), grid, tol, workers);

    const std::size_t n = grid.size();
    table.t_ = grid;
    table.e_.assign(n, 0.0);
    table.cum_e_.assign(n, 0.0);
    table.cum_psi_.assign(n, 0.0);

    Kahan i1, psi_acc, cum_e;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const long double a = grid[i], b = grid[i + 1];
        const long double gap_e = (b - a) * static_cast<long double>(i1.sum) +
                                  gaps[i].upper_moment -
                                  (main_term_integral(b) - main_term_integral(a));
        cum_e.add(static_cast<double>(gap_e));
        i1.add(gaps[i].plain);
        psi_acc.add(gaps[i].psi_weighted);
        table.e_[i + 1] = static_cast<double>(
            static_cast<long double>(i1.sum) - main_term_l(b));
        table.cum_e_[i + 1] = cum_e.sum;
        table.cum_psi_[i + 1] = psi_acc.sum;
    }

    if (cache) {
        const auto payload = table.serialize();
        cache->put("etable", key, payload);
    }
    return table;
}

double g_of(double x, const ErrorTermTable& table) {
    if (!(x >= 0.0)) throw std::domain_error("g_of: x must be >= 0");
    if (x > table.x_max()) throw std::out_of_range("g_of: x > table.x_max");
    if (x == 0.0) return 0.0;
    return table.cum_e_at(x) - kPi * x;
}

}  // namespace zetalab
