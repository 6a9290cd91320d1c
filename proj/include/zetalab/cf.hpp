#pragma once

// Arbitrary-precision values of e^{pi m}, certified continued-fraction
// expansions with exact big-integer convergents, and the partial-quotient
// growth diagnostics built on them.
//
// Certification: an expansion is recomputed at twice the working precision
// and only the agreeing quotient prefix is kept; precision escalates until
// the requested prefix length is certified.

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "zetalab/bigfloat.hpp"

namespace zetalab {

inline constexpr int kCfMaxAbsM = 64;
inline constexpr int kCfMaxDigits = 100000;
inline constexpr int kCfMaxTerms = 500;

// e^{pi m} correct to `digits` significant digits. Guards: m != 0,
// |m| <= 64, 20 <= digits <= 1e5.
BigFloat exp_pi_m(int m, int digits);

struct ContinuedFractionExpansion {
    int m = 0;                       // value is e^{pi m}
    int working_digits = 0;          // decimal digits of the final run
    int certified_len = 0;           // quotients certified (== quotients.size())
    std::vector<mpz_class> quotients;            // a_0 .. a_{certified_len-1}
    std::vector<std::pair<mpz_class, mpz_class>> convergents;  // (p_n, q_n)
};

// Expand e^{pi m} to at least n_terms certified partial quotients.
ContinuedFractionExpansion cf_expand(int m, int n_terms);

struct GapCheckRow {
    int n = 0;
    double ratio = 0.0;  // |xi - p_n/q_n| * q_n * q_{n+1}, must lie in (0, 1)
};

struct GapCheckReport {
    bool all_pass = false;
    double tightest_ratio = 0.0;  // closest approach to 1
    int tightest_n = 0;
    std::vector<GapCheckRow> rows;
};

// Verify |xi - p_n/q_n| < 1/(q_n q_{n+1}) for every certified n >= 1.
GapCheckReport convergent_gap_check(const ContinuedFractionExpansion& exp);

struct Lemma1Row {
    int n = 0;
    bool admissible = false;  // (n + log m) >= 3 and a_n >= 16
    double log_log_a = 0.0;
    double denom = 0.0;  // (n + log m) log(n + log m)
    double ratio = 0.0;
};

struct Lemma1Report {
    int m = 0;
    int n_max = 0;
    double sup_ratio = 0.0;
    int argmax_n = -1;
    std::vector<Lemma1Row> rows;
};

// sup over admissible n <= n_max of log log a_n(m) / [(n + log m) log(n + log m)].
Lemma1Report lemma1_ratio(int m, int n_max);

struct IrrationalityGap {
    double log_gap = 0.0;    // log |e^{pi m} - p/q|
    double log_bound = 0.0;  // log of the lower bound (kept in log space;
                             // the bound itself underflows any float)
    double margin = 0.0;     // log_gap - log_bound, > 0 when the bound holds
};

// Requires m >= 1, p >= 3, q >= 1.
IrrationalityGap irrationality_gap(int m, const mpz_class& p, const mpz_class& q);

}  // namespace zetalab
