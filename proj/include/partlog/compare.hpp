#pragma once

#include "partlog/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace partlog {

enum class Ordering { Less, Equal, Greater };

Ordering reverse(Ordering o);
const char* to_string(Ordering o);

enum class CompareMethod { LogPrefilter, ExactBigPower };

enum class ComparePolicy {
    Auto,        // prefilter first, exact fallback
    ForceExact,  // skip the prefilter entirely
};

struct PowerComparison {
    Ordering ordering;
    CompareMethod method;
    // Certified lower bound on the log-gap when the prefilter decided,
    // 0 when the exact path ran. Diagnostic only; never feeds a verdict.
    double prefilter_margin = 0.0;
};

/**
 * Exact order of a^p vs b^q for positive rationals and non-negative integer
 * exponents. The prefilter evaluates p*ln(a) and q*ln(b) as outward-rounded
 * MPFR intervals (96-bit, directed rounding at every step, so the enclosure
 * is rigorous); its answer is accepted only when the two intervals are
 * disjoint. Otherwise both powers are computed exactly by binary
 * exponentiation and compared as big rationals.
 *
 * Throws std::domain_error for non-positive bases and std::invalid_argument
 * when p = q = 0 (vacuous comparison).
 */
PowerComparison compare_powers(const Rational& a, unsigned long p,
                               const Rational& b, unsigned long q,
                               ComparePolicy policy = ComparePolicy::Auto);

using PowerFactor = std::pair<Rational, unsigned long>;

/// Exact order of prod a_i^{p_i} vs prod b_j^{q_j}, same strategy as
/// compare_powers. Empty products equal 1.
PowerComparison compare_products(std::span<const PowerFactor> lhs,
                                 std::span<const PowerFactor> rhs,
                                 ComparePolicy policy = ComparePolicy::Auto);

PowerComparison compare_products(std::initializer_list<PowerFactor> lhs,
                                 std::initializer_list<PowerFactor> rhs,
                                 ComparePolicy policy = ComparePolicy::Auto);

}  // namespace partlog
