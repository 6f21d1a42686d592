#include "partlog/examples.hpp"

#include <stdexcept>

namespace partlog {

ExampleKind parse_example_kind(const std::string& text) {
    if (text == "geom-minus-half") return ExampleKind::GeomMinusHalf;
    if (text == "geom-minus-half-reciprocal") return ExampleKind::GeomMinusHalfReciprocal;
    if (text == "periodic2343") return ExampleKind::Periodic2343;
    if (text == "fibonacci") return ExampleKind::Fibonacci;
    if (text == "two-pow-sqrt") return ExampleKind::TwoPowSqrt;
    if (text == "spliced") return ExampleKind::SplicedRatio;
    throw std::invalid_argument("unknown example kind '" + text + "'");
}

const char* to_string(ExampleKind kind) {
    switch (kind) {
        case ExampleKind::GeomMinusHalf: return "geom-minus-half";
        case ExampleKind::GeomMinusHalfReciprocal: return "geom-minus-half-reciprocal";
        case ExampleKind::Periodic2343: return "periodic2343";
        case ExampleKind::Fibonacci: return "fibonacci";
        case ExampleKind::TwoPowSqrt: return "two-pow-sqrt";
        default: return "spliced";
    }
}

ExactSequence example_values(ExampleKind kind, std::size_t upto) {
    std::vector<Rational> v;
    v.reserve(upto + 1);
    switch (kind) {
        case ExampleKind::GeomMinusHalf:
        case ExampleKind::GeomMinusHalfReciprocal: {
            mpz_class two_pow(1);
            for (std::size_t n = 0; n <= upto; ++n) {
                Rational a(mpz_class(2 * two_pow - 1), mpz_class(2));  // 2^n - 1/2
                v.push_back(kind == ExampleKind::GeomMinusHalf ? a : a.reciprocal());
                two_pow *= 2;
            }
            break;
        }
        case ExampleKind::Periodic2343: {
            static constexpr int pattern[4] = {2, 3, 4, 3};
            for (std::size_t n = 0; n <= upto; ++n) v.push_back(Rational(pattern[n % 4]));
            break;
        }
        case ExampleKind::Fibonacci: {
            mpz_class a(0), b(1);
            for (std::size_t n = 0; n <= upto; ++n) {
                v.push_back(Rational(a));
                mpz_class next = a + b;
                a = b;
                b = next;
            }
            break;
        }
        case ExampleKind::SplicedRatio: {
            const Rational ratio(31, 25);
            const Rational offset(1, 1000000);
            for (std::size_t n = 0; n <= std::min<std::size_t>(upto, 24); ++n)
                v.push_back(ratio.pow(n) + offset);
            if (upto >= 25) {
                SequenceGenerator p(PartitionFamily(Unrestricted{}));
                p.extend_to(upto);
                for (std::size_t n = 25; n <= upto; ++n) v.push_back(p.value(n));
            }
            break;
        }
        case ExampleKind::TwoPowSqrt:
            throw std::invalid_argument(
                "example_values: two-pow-sqrt has irrational values; use sqrt_family_compare");
    }
    return make_sequence(std::string("example:") + to_string(kind), std::move(v));
}

namespace {

Ordering cmp_to_ordering(int c) {
    return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
}

// Exponent comparisons for a_n = 2^sqrt(n): 2^x vs 2^y is x vs y, and the
// square-root sums square away to integers. a_0 = 1/2 = 2^-1 is the one
// rational special case.
Ordering sqrt_compare(const SqrtCheck& check) {
    struct Visitor {
        Ordering operator()(const SqrtLogConcavity& c) const {
            // a_{n+1}^2 vs a_n a_{n+2}
            if (c.n == 0) {
                // exponents: 2 vs sqrt(2) - 1, i.e. 3 vs sqrt(2), i.e. 9 vs 2
                return Ordering::Greater;
            }
            // 2 sqrt(n+1) vs sqrt(n) + sqrt(n+2): squaring twice leaves
            // (n+1)^2 vs n(n+2).
            const mpz_class lhs = mpz_class(c.n + 1) * mpz_class(c.n + 1);
            const mpz_class rhs = mpz_class(c.n) * mpz_class(c.n + 2);
            return cmp_to_ordering(cmp(lhs, rhs));
        }
        Ordering operator()(const SqrtSubMultiplicative& c) const {
            // a_{n+m} vs a_n a_m
            if (c.n == 0 && c.m == 0) return Ordering::Greater;  // 1/2 vs 1/4
            if (c.n == 0 || c.m == 0) return Ordering::Greater;  // a_k vs a_k / 2
            // sqrt(n+m) vs sqrt(n) + sqrt(m): squares to 0 vs 2 sqrt(nm).
            return Ordering::Less;
        }
        Ordering operator()(const SqrtCondition13& c) const {
            // (a_K)^{K+1} vs (a_{K+1})^K for K = N + k
            const std::size_t K = c.N + c.k;
            if (K == 0) return Ordering::Less;  // 1/2 vs 1
            // (K+1) sqrt(K) vs K sqrt(K+1): squares to (K+1)^2 K vs K^2 (K+1),
            // i.e. K+1 vs K.
            return Ordering::Greater;
        }
    };
    return std::visit(Visitor{}, check);
}

}  // namespace

PowerComparison sqrt_family_compare(const SqrtCheck& check) {
    return {sqrt_compare(check), CompareMethod::ExactBigPower, 0.0};
}

std::optional<std::size_t> sqrt_find_min_k(std::size_t N, std::size_t k_max) {
    for (std::size_t k = 0; k <= k_max; ++k)
        if (sqrt_family_compare(SqrtCondition13{N, k}).ordering != Ordering::Less) return k;
    return std::nullopt;
}

FibIdentityResult fibonacci_identities(std::size_t n, std::size_t m) {
    if (n < 1 || m < 1) throw std::invalid_argument("fibonacci_identities: requires n, m >= 1");
    const ExactSequence fib = example_values(ExampleKind::Fibonacci, n + m + 1);
    FibIdentityResult out;
    const Rational cassini = fib.at(n + 1) * fib.at(n - 1) - fib.at(n) * fib.at(n);
    const int want = n % 2 == 0 ? 1 : -1;
    if (cassini != Rational(want))
        throw std::logic_error("fibonacci_identities: Cassini value is not (-1)^n at n = " +
                               std::to_string(n));
    out.cassini_sign = want;
    out.addition_identity_holds =
        fib.at(n + m) == fib.at(m + 1) * fib.at(n) + fib.at(m) * fib.at(n - 1);
    return out;
}

Remark1Report verify_remark1(ExampleKind kind, std::size_t upto) {
    if (kind != ExampleKind::GeomMinusHalf && kind != ExampleKind::GeomMinusHalfReciprocal)
        throw std::invalid_argument("verify_remark1: kind must be geom-minus-half or its reciprocal");
    if (upto < 4) throw std::invalid_argument("verify_remark1: requires upto >= 4");
    const bool reciprocal = kind == ExampleKind::GeomMinusHalfReciprocal;
    const ExactSequence a = example_values(kind, 2 * upto);

    Remark1Report report;
    report.kind = kind;
    report.upto = upto;

    // Strict log-concavity (reciprocal: strict log-convexity).
    report.strictly_log_monotone = true;
    for (std::size_t n = 1; n + 1 <= 2 * upto && report.strictly_log_monotone; ++n) {
        const int c = (a.at(n) * a.at(n)).compare(a.at(n - 1) * a.at(n + 1));
        report.strictly_log_monotone = reciprocal ? c < 0 : c > 0;
    }

    // Root condition false for N = 0 and every k: (a_k)^{k+1} < (a_{k+1})^k
    // strictly (reciprocal: reversed).
    report.condition13_always_false = true;
    for (std::size_t k = 0; k <= upto && report.condition13_always_false; ++k) {
        const Ordering o = compare_powers(a.at(k), k + 1, a.at(k + 1), k).ordering;
        report.condition13_always_false = reciprocal ? o == Ordering::Greater : o == Ordering::Less;
    }

    // Strict deficiency (reciprocal: strict abundance) over the window.
    report.multiplicative_side_strict = true;
    for (std::size_t n = 0; n <= upto && report.multiplicative_side_strict; ++n)
        for (std::size_t m = 0; m <= upto; ++m) {
            const int c = (a.at(n) * a.at(m)).compare(a.at(n + m));
            if (reciprocal ? c <= 0 : c >= 0) {
                report.multiplicative_side_strict = false;
                break;
            }
        }

    // n-th roots strictly increasing (reciprocal: strictly decreasing).
    report.roots_strictly_monotone = true;
    for (std::size_t n = 1; n <= upto && report.roots_strictly_monotone; ++n) {
        const Ordering o = compare_powers(a.at(n), n + 1, a.at(n + 1), n).ordering;
        report.roots_strictly_monotone = reciprocal ? o == Ordering::Greater : o == Ordering::Less;
    }

    report.pass = report.strictly_log_monotone && report.condition13_always_false &&
                  report.multiplicative_side_strict && report.roots_strictly_monotone;
    return report;
}

Example5Report verify_example5() {
    const ExactSequence a = example_values(ExampleKind::SplicedRatio, 420);
    Example5Report report;

    report.log_concave_from_25 = true;
    for (std::size_t n = 25; n <= 200 && report.log_concave_from_25; ++n)
        report.log_concave_from_25 = (a.at(n) * a.at(n)).compare(a.at(n - 1) * a.at(n + 1)) >= 0;

    // (a_n)^{1/n} < a_26/a_25  <=>  a_n a_25^n < a_26^n
    report.roots_below_ratio_26_25 = true;
    for (std::size_t n = 1; n <= 24 && report.roots_below_ratio_26_25; ++n) {
        const Ordering o = compare_products({{a.at(n), 1}, {a.at(25), n}}, {{a.at(26), n}}).ordering;
        report.roots_below_ratio_26_25 = o == Ordering::Less;
    }

    // a_26/a_25 < a_25/a_24  <=>  a_26 a_24 < a_25^2
    report.ratio_chain_holds = (a.at(26) * a.at(24)).compare(a.at(25) * a.at(25)) < 0;

    // (a_n)^{1/n} > a_27/a_26  <=>  a_n a_26^n > a_27^n
    report.roots_above_ratio_27_26 = true;
    for (std::size_t n = 1; n <= 25 && report.roots_above_ratio_27_26; ++n) {
        const Ordering o = compare_products({{a.at(n), 1}, {a.at(26), n}}, {{a.at(27), n}}).ordering;
        report.roots_above_ratio_27_26 = o == Ordering::Greater;
    }

    report.d_at_M26 = find_d_M(a, 25, 0, 26, Direction::Concave);
    report.d_at_M25 = find_d_M(a, 25, 0, 25, Direction::Concave);

    report.theorem = verify_theorem_11(a, 25, 0, 26, 60, Direction::Concave);

    report.failures_within_25_box = true;
    for (const Cell& c : report.theorem.failures)
        if (c.first > 25 || c.second > 25) {
            report.failures_within_25_box = false;
            break;
        }

    report.pass = report.log_concave_from_25 && report.roots_below_ratio_26_25 &&
                  report.ratio_chain_holds && report.roots_above_ratio_27_26 &&
                  report.d_at_M26 == std::optional<std::size_t>(1) && report.theorem.pass &&
                  report.failures_within_25_box;
    return report;
}

}  // namespace partlog
