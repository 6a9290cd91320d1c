#include "zetalab/cf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

constexpr int kMaxEscalations = 6;

// Raw expansion at a fixed precision. Stops early at the near-integer
// guard: once a fractional part drops below 10^{-digits/2} it cannot be
// distinguished from a rational at this precision and later quotients
// would be garbage.
std::vector<mpz_class> expand_at(int m, int n_terms, int digits) {
    const mpfr_prec_t prec = BigFloat::bits_for_digits(digits);
    BigFloat x = exp_pi_m(m, digits);

    BigFloat guard = BigFloat::from_si(10, prec);
    {
        // guard = 10^{-digits/2}
        BigFloat e = BigFloat::from_si(-(digits / 2), prec);
        guard = (guard.log() * e).exp();
    }

    std::vector<mpz_class> q;
    q.reserve(n_terms);
    for (int k = 0; k < n_terms; ++k) {
        mpz_class a = x.floor_to_mpz();
        q.push_back(a);
        BigFloat f = x.frac();
        if (f.cmp(guard) < 0) break;  // cannot certify past this point
        x = BigFloat::from_si(1, prec) / f;
    }
    return q;
}

std::size_t common_prefix(const std::vector<mpz_class>& a,
                          const std::vector<mpz_class>& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

}  // namespace

BigFloat exp_pi_m(int m, int digits) {
    if (m == 0) throw std::domain_error("exp_pi_m: m must be non-zero");
    if (m < -kCfMaxAbsM || m > kCfMaxAbsM)
        throw CapacityError("exp_pi_m: |m| exceeds the range guard (64)");
    if (digits < 20 || digits > kCfMaxDigits)
        throw CapacityError("exp_pi_m: digits outside [20, 1e5]");
    const mpfr_prec_t prec = BigFloat::bits_for_digits(digits);
    BigFloat x = BigFloat::pi(prec + 32);
    x.mul_si(m);
    return x.exp();
}

ContinuedFractionExpansion cf_expand(int m, int n_terms) {
    if (n_terms < 1) throw std::domain_error("cf_expand: n_terms must be >= 1");
    if (n_terms > kCfMaxTerms)
        throw CapacityError("cf_expand: n_terms exceeds the guard (500)");
    if (m == 0) throw std::domain_error("cf_expand: m must be non-zero");

    int digits = 40 + 4 * n_terms;
    for (int attempt = 0; attempt <= kMaxEscalations; ++attempt) {
        const auto lo = expand_at(m, n_terms, digits);
        const auto hi = expand_at(m, n_terms, 2 * digits);
        const std::size_t agree = common_prefix(lo, hi);
        if (agree >= static_cast<std::size_t>(n_terms)) {
            ContinuedFractionExpansion out;
            out.m = m;
            out.working_digits = digits;
            out.certified_len = n_terms;
            out.quotients.assign(lo.begin(), lo.begin() + n_terms);
            out.convergents.reserve(n_terms);
            mpz_class p_prev = 1, q_prev = 0;   // (p_{-1}, q_{-1})
            mpz_class p = out.quotients[0], q = 1;
            out.convergents.emplace_back(p, q);
            for (int n = 1; n < n_terms; ++n) {
                mpz_class pn = out.quotients[n] * p + p_prev;
                mpz_class qn = out.quotients[n] * q + q_prev;
                p_prev = p;
                q_prev = q;
                p = pn;
                q = qn;
                out.convergents.emplace_back(p, q);
            }
            return out;
        }
        digits *= 2;
    }
    throw PrecisionError("cf_expand: precision escalation limit reached");
}

GapCheckReport convergent_gap_check(const ContinuedFractionExpansion& exp) {
    if (exp.certified_len < 3)
        throw std::domain_error("convergent_gap_check: need certified_len >= 3");

    const mpfr_prec_t prec = BigFloat::bits_for_digits(exp.working_digits);
    const BigFloat xi = exp_pi_m(exp.m, exp.working_digits);

    GapCheckReport report;
    report.all_pass = true;
    report.tightest_ratio = 0.0;
    for (int n = 1; n + 1 < exp.certified_len; ++n) {
        const auto& [pn, qn] = exp.convergents[n];
        const auto& [pn1, qn1] = exp.convergents[n + 1];
        BigFloat approx = BigFloat::from_mpz(pn, prec) / BigFloat::from_mpz(qn, prec);
        BigFloat gap = (xi - approx).abs();
        BigFloat ratio = gap * BigFloat::from_mpz(qn, prec) * BigFloat::from_mpz(qn1, prec);
        GapCheckRow row;
        row.n = n;
        row.ratio = ratio.to_double();
        report.rows.push_back(row);
        if (!(row.ratio > 0.0 && row.ratio < 1.0)) report.all_pass = false;
        if (row.ratio > report.tightest_ratio) {
            report.tightest_ratio = row.ratio;
            report.tightest_n = n;
        }
    }
    return report;
}

Lemma1Report lemma1_ratio(int m, int n_max) {
    if (m < 1) throw std::domain_error("lemma1_ratio: m must be >= 1");
    if (n_max < 1) throw std::domain_error("lemma1_ratio: n_max must be >= 1");

    const auto exp = cf_expand(m, n_max + 1);
    const double log_m = std::log(static_cast<double>(m));

    Lemma1Report report;
    report.m = m;
    report.n_max = n_max;
    bool any = false;
    for (int n = 0; n <= n_max; ++n) {
        Lemma1Row row;
        row.n = n;
        const mpz_class& a = exp.quotients[n];
        const double npl = n + log_m;
        row.admissible = (npl >= 3.0) && (a >= 16);
        if (row.admissible) {
            // log a_n via the bit size when a_n is too large for a double.
            const double log_a =
                (a < 1e300) ? std::log(a.get_d())
                            : std::log(2.0) * static_cast<double>(
                                  mpz_sizeinbase(a.get_mpz_t(), 2));
            row.log_log_a = std::log(log_a);
            row.denom = npl * std::log(npl);
            row.ratio = row.log_log_a / row.denom;
            any = true;
            if (row.ratio > report.sup_ratio) {
                report.sup_ratio = row.ratio;
                report.argmax_n = n;
            }
        }
        report.rows.push_back(row);
    }
    if (!any)
        throw std::domain_error(
            "lemma1_ratio: no admissible n (need n + log m >= 3 and a_n >= 16)");
    return report;
}

IrrationalityGap irrationality_gap(int m, const mpz_class& p, const mpz_class& q) {
    if (m < 1) throw std::domain_error("irrationality_gap: m must be >= 1");
    if (p < 3) throw std::domain_error("irrationality_gap: p must be >= 3");
    if (q < 1) throw std::domain_error("irrationality_gap: q must be >= 1");

    // Enough digits to resolve the gap even for a deep convergent.
    const auto qd = mpz_sizeinbase(q.get_mpz_t(), 10);
    int digits = static_cast<int>(4 * qd + 60);
    digits = std::min(digits, kCfMaxDigits);

    IrrationalityGap out;
    bool resolved = false;
    for (int attempt = 0; attempt < 4 && !resolved; ++attempt) {
        const mpfr_prec_t prec = BigFloat::bits_for_digits(digits);
        BigFloat xi = exp_pi_m(m, digits);
        BigFloat gap =
            (xi - BigFloat::from_mpz(p, prec) / BigFloat::from_mpz(q, prec)).abs();
        if (!gap.is_zero()) {
            out.log_gap = gap.log().to_double();
            resolved = true;
        } else {
            digits = std::min(2 * digits, kCfMaxDigits);
        }
    }
    if (!resolved)
        throw PrecisionError("irrationality_gap: gap below certifiable precision");

    const double log_p =
        (p < 1e300) ? std::log(p.get_d())
                    : std::log(2.0) * static_cast<double>(
                          mpz_sizeinbase(p.get_mpz_t(), 2));
    out.log_bound = -std::ldexp(1.0, 72) * std::log(2.0 * m) * log_p * std::log(log_p);
    out.margin = out.log_gap - out.log_bound;
    return out;
}

}  // namespace zetalab
