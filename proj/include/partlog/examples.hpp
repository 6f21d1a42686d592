#pragma once

#include "partlog/analysis.hpp"
#include "partlog/compare.hpp"
#include "partlog/sequence.hpp"

#include <optional>
#include <string>
#include <variant>

namespace partlog {

// Hand-constructed sequences:
//   GeomMinusHalf            a_n = 2^n - 1/2
//   GeomMinusHalfReciprocal  b_n = 1 / (2^n - 1/2)
//   Periodic2343             2, 3, 4, 3 repeating from n = 0
//   Fibonacci                F_0 = 0, F_1 = 1
//   TwoPowSqrt               a_0 = 1/2, a_n = 2^sqrt(n); irrational, exposed
//                            only through exact comparators
//   SplicedRatio             (31/25)^n + 10^-6 for n <= 24, p(n) for n >= 25
enum class ExampleKind {
    GeomMinusHalf,
    GeomMinusHalfReciprocal,
    Periodic2343,
    Fibonacci,
    TwoPowSqrt,
    SplicedRatio,
};

ExampleKind parse_example_kind(const std::string& text);
const char* to_string(ExampleKind kind);

/// Exact rational values for every kind except TwoPowSqrt, which throws
/// std::invalid_argument.
ExactSequence example_values(ExampleKind kind, std::size_t upto);

// The three comparison shapes for a_n = 2^sqrt(n) (a_0 = 1/2). Each reduces
// to an integer inequality by comparing exponents and squaring away the
// roots; verdicts are exact, no approximation anywhere.
struct SqrtLogConcavity { std::size_t n; };         // a_{n+1}^2 vs a_n a_{n+2}
struct SqrtSubMultiplicative { std::size_t n, m; }; // a_{n+m}   vs a_n a_m
struct SqrtCondition13 { std::size_t N, k; };       // (a_{N+k})^{N+k+1} vs (a_{N+k+1})^{N+k}
using SqrtCheck = std::variant<SqrtLogConcavity, SqrtSubMultiplicative, SqrtCondition13>;

PowerComparison sqrt_family_compare(const SqrtCheck& check);

/// find_min_k for the 2^sqrt(n) family, via the symbolic comparator.
std::optional<std::size_t> sqrt_find_min_k(std::size_t N, std::size_t k_max);

struct FibIdentityResult {
    int cassini_sign = 0;             // F_{n+1}F_{n-1} - F_n^2, verified to be (-1)^n
    bool addition_identity_holds = false;  // F_{n+m} = F_{m+1}F_n + F_m F_{n-1}
};

FibIdentityResult fibonacci_identities(std::size_t n, std::size_t m);

struct Remark1Report {
    ExampleKind kind = ExampleKind::GeomMinusHalf;
    std::size_t upto = 0;
    bool strictly_log_monotone = false;   // log-concave (reciprocal: log-convex), strict
    bool condition13_always_false = false;  // for N = 0 and every k <= upto
    bool multiplicative_side_strict = false;  // deficient (reciprocal: abundant), strict
    bool roots_strictly_monotone = false;     // n-th roots increasing (reciprocal: decreasing)
    bool pass = false;
};

/// Checks the 2^n - 1/2 sequence (or its reciprocal) exactly over rationals:
/// strict log-behavior, Condition (1.3)-style root condition false for every
/// k, strict deficiency/abundance, and strict n-th-root monotonicity.
Remark1Report verify_remark1(ExampleKind kind, std::size_t upto);

struct Example5Report {
    bool log_concave_from_25 = false;      // a_n^2 >= a_{n-1}a_{n+1}, 25 <= n <= 200
    bool roots_below_ratio_26_25 = false;  // (a_n)^{1/n} < a_26/a_25, 1 <= n <= 24
    bool ratio_chain_holds = false;        // a_26/a_25 < a_25/a_24
    bool roots_above_ratio_27_26 = false;  // (a_n)^{1/n} > a_27/a_26, 1 <= n <= 25
    std::optional<std::size_t> d_at_M26;
    std::optional<std::size_t> d_at_M25;
    Theorem11Report theorem;               // N=25, k=0, M=26
    bool failures_within_25_box = false;   // all failures inside [1,25]^2
    bool pass = false;
};

Example5Report verify_example5();

}  // namespace partlog
