#include "partlog/logpoly.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace partlog {

namespace {

int exact_kappa(const Rational& r, const Rational& s, const Rational& t) {
    (void)r;
    return (s * (s - Rational(1)) * t).sign();
}

void validate_domain(const Rational& r, const Rational& s, const Rational& t) {
    if (r.is_zero() && t.is_zero())
        throw std::invalid_argument("logpoly: r and t must not both be zero");
    if (s.sign() <= 0 || s >= Rational(2))
        throw std::invalid_argument("logpoly: requires 0 < s < 2");
    if (exact_kappa(r, s, t) == 0)
        throw std::invalid_argument("logpoly: requires s(s-1)t != 0");
}

}  // namespace

double LogPolyData::A(double n) const {
    return -r.to_double() / n + s.to_double() * t.to_double() * std::pow(n, s.to_double() - 1.0);
}

double LogPolyData::kappa_delta_sq(double n) const {
    const double ss = s.to_double();
    return -r.to_double() / (2.0 * n * n) +
           (s * (s - Rational(1)) * t).to_double() / (2.0 * std::pow(n, 2.0 - ss));
}

LogPolyData logpoly_data(const Rational& r, const Rational& s, const Rational& t) {
    validate_domain(r, s, t);
    return LogPolyData{r, s, t, exact_kappa(r, s, t)};
}

LogBehaviorReport empirical_log_behavior(const Rational& r, const Rational& s, const Rational& t,
                                         std::size_t n_lo, std::size_t n_hi) {
    validate_domain(r, s, t);
    LogBehaviorReport report;
    report.kappa = exact_kappa(r, s, t);
    report.first_checked = std::max<std::size_t>(n_lo, 2);
    if (n_hi < report.first_checked + 1)
        throw std::invalid_argument("empirical_log_behavior: range too small");
    report.last_checked = n_hi - 1;

    const double rd = r.to_double(), sd = s.to_double(), td = t.to_double();
    for (std::size_t n = report.first_checked; n <= report.last_checked; ++n) {
        const double x = static_cast<double>(n);
        // ln(n+1) + ln(n-1) - 2 ln n = log1p(-1/n^2), well conditioned.
        double d2 = rd == 0.0 ? 0.0 : rd * std::log1p(-1.0 / (x * x));
        if (td != 0.0) {
            // (n+1)^s + (n-1)^s - 2 n^s = n^s (expm1(s log1p(1/n)) + expm1(s log1p(-1/n)))
            const double up = std::expm1(sd * std::log1p(1.0 / x));
            const double down = std::expm1(sd * std::log1p(-1.0 / x));
            d2 += td * std::pow(x, sd) * (up + down);
        }
        const int sign = d2 > 0.0 ? 1 : d2 < 0.0 ? -1 : 0;
        if (sign != report.kappa) report.mismatches.push_back(n);
    }
    report.onset = report.mismatches.empty() ? report.first_checked : report.mismatches.back() + 1;
    report.pass = report.onset <= report.last_checked;
    return report;
}

// ---------------------------------------------------------------------------

namespace {

struct Interval {
    mpfr_t lo, hi;
    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_zero(lo, 0);
        mpfr_set_zero(hi, 0);
    }
    ~Interval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;

    void add(const Interval& o) {
        mpfr_add(lo, lo, o.lo, MPFR_RNDD);
        mpfr_add(hi, hi, o.hi, MPFR_RNDU);
    }
    void sub(const Interval& o) {
        mpfr_sub(lo, lo, o.hi, MPFR_RNDD);
        mpfr_sub(hi, hi, o.lo, MPFR_RNDU);
    }
    void scale(const Rational& c) {  // multiply by an exact rational
        if (c.sign() >= 0) {
            mpfr_mul_q(lo, lo, c.mpq().get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(hi, hi, c.mpq().get_mpq_t(), MPFR_RNDU);
        } else {
            mpfr_swap(lo, hi);
            mpfr_mul_q(lo, lo, c.mpq().get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(hi, hi, c.mpq().get_mpq_t(), MPFR_RNDU);
        }
    }
    int sign() const {  // +1 / -1 when 0 excluded, 0 when exactly [0,0], else 2 (undecided)
        if (mpfr_sgn(lo) > 0) return 1;
        if (mpfr_sgn(hi) < 0) return -1;
        if (mpfr_zero_p(lo) && mpfr_zero_p(hi)) return 0;
        return 2;
    }
};

void ln_interval(unsigned long x, Interval& out) {
    mpfr_set_ui(out.lo, x, MPFR_RNDD);
    mpfr_log(out.lo, out.lo, MPFR_RNDD);
    mpfr_set_ui(out.hi, x, MPFR_RNDU);
    mpfr_log(out.hi, out.hi, MPFR_RNDU);
}

// x^s for integer x >= 1 and rational s in (0, 1]; monotone in s once x > 1.
void pow_interval(unsigned long x, const Rational& s, mpfr_prec_t prec, Interval& out) {
    if (x == 1) {
        mpfr_set_ui(out.lo, 1, MPFR_RNDD);
        mpfr_set_ui(out.hi, 1, MPFR_RNDU);
        return;
    }
    Interval exp(prec);
    mpfr_set_q(exp.lo, s.mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(exp.hi, s.mpq().get_mpq_t(), MPFR_RNDU);
    Interval base(prec);
    mpfr_set_ui(base.lo, x, MPFR_RNDD);
    mpfr_pow(out.lo, base.lo, exp.lo, MPFR_RNDD);
    mpfr_pow(out.hi, base.lo, exp.hi, MPFR_RNDU);
}

// sign of g(n,m) = r (ln n + ln m - ln(n+m)) + t (n^s + m^s - (n+m)^s)
int interval_sign(const Rational& r, const Rational& s, const Rational& t, std::size_t n,
                  std::size_t m, mpfr_prec_t prec) {
    Interval g(prec);
    if (!r.is_zero()) {
        Interval lterm(prec), tmp(prec);
        ln_interval(n, lterm);
        ln_interval(m, tmp);
        lterm.add(tmp);
        ln_interval(n + m, tmp);
        lterm.sub(tmp);
        lterm.scale(r);
        g.add(lterm);
    }
    if (!t.is_zero()) {
        Interval pterm(prec), tmp(prec);
        pow_interval(n, s, prec, pterm);
        pow_interval(m, s, prec, tmp);
        pterm.add(tmp);
        pow_interval(n + m, s, prec, tmp);
        pterm.sub(tmp);
        pterm.scale(t);
        g.add(pterm);
    }
    return g.sign();
}

int g_sign(const Rational& r, const Rational& s, const Rational& t, std::size_t n, std::size_t m,
           bool& unresolved) {
    unresolved = false;
    if (s.is_one()) {
        // t-term cancels exactly; g = r ln(nm/(n+m)).
        if (r.is_zero()) return 0;
        const int c = cmp(mpz_class(n) * mpz_class(m), mpz_class(n) + mpz_class(m));
        return r.sign() * c;
    }
    const double rd = r.to_double(), sd = s.to_double(), td = t.to_double();
    const double x = static_cast<double>(n), y = static_cast<double>(m);
    const double lpart = rd == 0.0 ? 0.0 : rd * (std::log(x) + std::log(y) - std::log(x + y));
    const double ppart =
        td == 0.0 ? 0.0 : td * (std::pow(x, sd) + std::pow(y, sd) - std::pow(x + y, sd));
    const double g = lpart + ppart;
    const double scale = std::abs(lpart) + std::abs(ppart) + 1.0;
    if (std::abs(g) > scale * 1e-12) return g > 0.0 ? 1 : -1;
    for (mpfr_prec_t prec : {192, 512, 1024}) {
        const int sign = interval_sign(r, s, t, n, m, prec);
        if (sign != 2) return sign;
    }
    unresolved = true;
    return 0;
}

}  // namespace

AbundanceScanReport theorem42_abundance_check(const Rational& r, const Rational& s,
                                              const Rational& t, IndexRange box) {
    if (s.sign() <= 0 || s > Rational(1))
        throw std::invalid_argument("theorem42_abundance_check: requires 0 < s <= 1");
    if (!s.is_one()) {
        validate_domain(r, s, t);
        if (exact_kappa(r, s, t) != -1)
            throw std::invalid_argument("theorem42_abundance_check: requires kappa = -1");
    }
    if (box.lo < 1 || box.hi < box.lo)
        throw std::invalid_argument("theorem42_abundance_check: bad box");

    AbundanceScanReport report;
    report.box = box;
    for (std::size_t n = box.lo; n <= box.hi; ++n)
        for (std::size_t m = box.lo; m <= box.hi; ++m) {
            bool unresolved = false;
            const int sign = g_sign(r, s, t, n, m, unresolved);
            if (unresolved) ++report.unresolved_ties;
            if (sign > 0) ++report.strict;
            else if (sign == 0) ++report.equal;
            else {
                ++report.failure;
                report.failures.push_back({n, m});
            }
        }
    std::size_t worst = 0;
    for (const Cell& c : report.failures) worst = std::max(worst, std::min(c.first, c.second));
    report.onset = report.failures.empty() ? box.lo : worst + 1;
    report.equal_everywhere = report.equal == box.width() * box.width();
    return report;
}

}  // namespace partlog
