#pragma once

#include "partlog/analysis.hpp"
#include "partlog/rational.hpp"

#include <vector>

namespace partlog {

// a(n) = n^r e^{t n^s}. This module is the one place floating point is
// allowed: the claims here are asymptotic sign claims, and near-ties escalate
// to directed-rounding intervals of increasing precision instead of leaning
// on an epsilon.

struct LogPolyData {
    Rational r, s, t;
    int kappa = 0;  // sgn(s(s-1)t), computed exactly

    double A(double n) const;               // -r/n + s t n^{s-1}
    double kappa_delta_sq(double n) const;  // -r/(2n^2) + s(s-1)t / (2 n^{2-s})
};

/// Validates r, t not both zero, 0 < s < 2, s(s-1)t != 0.
LogPolyData logpoly_data(const Rational& r, const Rational& s, const Rational& t);

struct LogBehaviorReport {
    int kappa = 0;
    std::size_t first_checked = 0;
    std::size_t last_checked = 0;
    std::vector<std::size_t> mismatches;  // sign of the second difference != kappa
    std::size_t onset = 0;                // last mismatch + 1, or first_checked when clean
    bool pass = false;                    // a clean tail exists up to last_checked
};

/// Second difference of log a(n) = r log n + t n^s over [n_lo, n_hi]; its
/// sign must settle to kappa above the reported onset.
LogBehaviorReport empirical_log_behavior(const Rational& r, const Rational& s, const Rational& t,
                                         std::size_t n_lo, std::size_t n_hi);

struct AbundanceScanReport {
    IndexRange box{1, 1};
    std::size_t strict = 0, equal = 0, failure = 0;
    std::vector<Cell> failures;
    std::size_t onset = 0;  // smallest v with no failure at min(n,m) >= v
    bool equal_everywhere = false;
    std::size_t unresolved_ties = 0;  // never expected in domain; counted, classified Equal
};

/// Classifies a(n)a(m) vs a(n+m) over box^2 by comparing log-exponents.
/// Requires 0 < s <= 1, and kappa = -1 when s < 1 (the abundant side); s = 1
/// is the boundary where the t-term cancels exactly.
AbundanceScanReport theorem42_abundance_check(const Rational& r, const Rational& s,
                                              const Rational& t, IndexRange box);

}  // namespace partlog
