#include "partlog/compare.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace partlog {

Ordering reverse(Ordering o) {
    switch (o) {
        case Ordering::Less: return Ordering::Greater;
        case Ordering::Greater: return Ordering::Less;
        default: return Ordering::Equal;
    }
}

const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "Less";
        case Ordering::Equal: return "Equal";
        default: return "Greater";
    }
}

namespace {

constexpr mpfr_prec_t kPrefilterPrec = 96;

struct MpfrValue {
    mpfr_t v;
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~MpfrValue() { mpfr_clear(v); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
};

// Outward-rounded enclosure of sum_i e_i * ln(q_i). Every step rounds in the
// interval's direction (mpfr_set_q, mpfr_log and mpfr_mul_ui are all
// correctly rounded, and ln is increasing), so [lo, hi] truly contains the
// linear form.
void log_linear_form(std::span<const PowerFactor> factors, mpfr_t lo, mpfr_t hi) {
    mpfr_set_zero(lo, 0);
    mpfr_set_zero(hi, 0);
    MpfrValue t(kPrefilterPrec);
    for (const auto& [base, exp] : factors) {
        if (!base.is_positive())
            throw std::domain_error("compare: non-positive base " + base.str());
        if (exp == 0 || base.is_one()) continue;
        mpfr_set_q(t.v, base.mpq().get_mpq_t(), MPFR_RNDD);
        mpfr_log(t.v, t.v, MPFR_RNDD);
        mpfr_mul_ui(t.v, t.v, exp, MPFR_RNDD);
        mpfr_add(lo, lo, t.v, MPFR_RNDD);
        mpfr_set_q(t.v, base.mpq().get_mpq_t(), MPFR_RNDU);
        mpfr_log(t.v, t.v, MPFR_RNDU);
        mpfr_mul_ui(t.v, t.v, exp, MPFR_RNDU);
        mpfr_add(hi, hi, t.v, MPFR_RNDU);
    }
}

Rational exact_product(std::span<const PowerFactor> factors) {
    Rational acc(1);
    for (const auto& [base, exp] : factors) {
        if (!base.is_positive())
            throw std::domain_error("compare: non-positive base " + base.str());
        if (exp == 0) continue;
        acc *= base.pow(exp);
    }
    return acc;
}

}  // namespace

PowerComparison compare_products(std::span<const PowerFactor> lhs,
                                 std::span<const PowerFactor> rhs,
                                 ComparePolicy policy) {
    if (policy == ComparePolicy::Auto) {
        MpfrValue llo(kPrefilterPrec), lhi(kPrefilterPrec);
        MpfrValue rlo(kPrefilterPrec), rhi(kPrefilterPrec);
        log_linear_form(lhs, llo.v, lhi.v);
        log_linear_form(rhs, rlo.v, rhi.v);
        MpfrValue gap(kPrefilterPrec);
        if (mpfr_cmp(lhi.v, rlo.v) < 0) {
            mpfr_sub(gap.v, rlo.v, lhi.v, MPFR_RNDD);
            return {Ordering::Less, CompareMethod::LogPrefilter, mpfr_get_d(gap.v, MPFR_RNDD)};
        }
        if (mpfr_cmp(llo.v, rhi.v) > 0) {
            mpfr_sub(gap.v, llo.v, rhi.v, MPFR_RNDD);
            return {Ordering::Greater, CompareMethod::LogPrefilter, mpfr_get_d(gap.v, MPFR_RNDD)};
        }
        // Intervals overlap: equality is possible, decide exactly.
    }
    const int c = exact_product(lhs).compare(exact_product(rhs));
    const Ordering o = c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
    return {o, CompareMethod::ExactBigPower, 0.0};
}

PowerComparison compare_products(std::initializer_list<PowerFactor> lhs,
                                 std::initializer_list<PowerFactor> rhs,
                                 ComparePolicy policy) {
    return compare_products(std::span<const PowerFactor>(lhs.begin(), lhs.size()),
                            std::span<const PowerFactor>(rhs.begin(), rhs.size()), policy);
}

PowerComparison compare_powers(const Rational& a, unsigned long p,
                               const Rational& b, unsigned long q,
                               ComparePolicy policy) {
    if (!a.is_positive() || !b.is_positive())
        throw std::domain_error("compare_powers: bases must be positive");
    if (p == 0 && q == 0)
        throw std::invalid_argument("compare_powers: p = q = 0 is vacuous");
    const PowerFactor lhs{a, p}, rhs{b, q};
    return compare_products(std::span<const PowerFactor>(&lhs, 1),
                            std::span<const PowerFactor>(&rhs, 1), policy);
}

}  // namespace partlog
