#pragma once

#include "partlog/compare.hpp"
#include "partlog/sequence.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace partlog {

/// Concave is the abundance side (x_n x_m >= x_{n+m} with x_n^2 >= x_{n-1}x_{n+1});
/// Convex reverses every comparison.
enum class Direction { Concave, Convex };

Direction parse_direction(const std::string& text);
const char* to_string(Direction d);

enum class Verdict : std::uint8_t { Strict, Equal, Failure };
const char* to_string(Verdict v);

struct IndexRange {
    std::size_t lo = 0;
    std::size_t hi = 0;  // inclusive
    std::size_t width() const { return hi - lo + 1; }
};

using Cell = std::pair<std::size_t, std::size_t>;

// ---------------------------------------------------------------------------

struct ThresholdReport {
    std::string label;
    Direction mode = Direction::Concave;
    std::size_t first_checked = 0;
    std::size_t horizon = 0;
    std::vector<std::size_t> violations;  // ascending, exact
    // Largest violation index; when the whole window is clean this is
    // first_checked - 1 (the strongest "log-concave for all n > N"
    // statement the window supports). Never trustworthy beyond horizon.
    std::size_t candidate_N = 0;
};

/**
 * Exact sign scan of x_n^2 vs x_{n-1} x_{n+1} over n in
 * [first_checked, horizon]. first_checked defaults to start_index + 1 so the
 * index-0 value participates as a neighbor; pass a larger value to exclude
 * it. Requires the run to cover [first_checked - 1, horizon + 1] and every
 * touched value to be positive.
 */
ThresholdReport scan_log_behavior(const ExactSequence& seq, Direction mode, std::size_t horizon,
                                  std::optional<std::size_t> first_checked = std::nullopt);
ThresholdReport scan_log_behavior_serial(const ExactSequence& seq, Direction mode, std::size_t horizon,
                                         std::optional<std::size_t> first_checked = std::nullopt);

/// (x_{N+k})^{N+k+1} >= (x_{N+k+1})^{N+k} in Concave mode, <= in Convex mode.
bool check_condition_13(const ExactSequence& seq, std::size_t N, std::size_t k, Direction mode);

/// Smallest k in [0, k_max] with check_condition_13 true.
std::optional<std::size_t> find_min_k(const ExactSequence& seq, std::size_t N, std::size_t k_max,
                                      Direction mode);

/**
 * Smallest d in [1, N+k] such that (x_{M+1}/x_M)^m <= x_m (cross-multiplied,
 * exact; reversed in Convex mode) holds for every m in [d, N+k]. Returns
 * nullopt when even m = N+k fails, and 1 vacuously when N+k = 0. Requires
 * M >= N+k.
 */
std::optional<std::size_t> find_d_M(const ExactSequence& seq, std::size_t N, std::size_t k,
                                    std::size_t M, Direction mode);

struct ConditionReport {
    std::size_t N = 0;
    std::size_t k = 0;
    bool condition13_holds = false;
    std::optional<std::size_t> d;
    std::optional<std::size_t> M;
    std::vector<std::size_t> witness_failures;  // m in [1, N+k] where the ratio condition fails
};

/// check_condition_13 plus, when M is given, the find_d_M search with its
/// per-m failure witnesses.
ConditionReport condition_report(const ExactSequence& seq, std::size_t N, std::size_t k,
                                 std::optional<std::size_t> M, Direction mode);

struct BoundsCheck {
    bool lower_holds = false;
    bool upper_holds = false;
};

/**
 * Exact truth of both sides of
 *   (x_N)^{m/(n-N+m)} (x_{n+m})^{(n-N)/(n-N+m)} <= x_n <= x_N (x_{N+1}/x_N)^{n-N}
 * after clearing fractional exponents (both sides reversed in Convex mode).
 * The log-concavity precondition on (N, n+m] is verified and a violation
 * throws std::domain_error naming the index.
 */
BoundsCheck check_bounds_12(const ExactSequence& seq, std::size_t N, std::size_t n, std::size_t m,
                            Direction mode);

// ---------------------------------------------------------------------------

class PairClassification {
public:
    PairClassification(std::string label, IndexRange a_range, IndexRange b_range, Direction mode);

    const std::string& label() const { return label_; }
    IndexRange a_range() const { return a_; }
    IndexRange b_range() const { return b_; }
    Direction mode() const { return mode_; }

    Verdict at(std::size_t a, std::size_t b) const;
    void set(std::size_t a, std::size_t b, Verdict v);

    std::vector<Cell> cells(Verdict v) const;          // ordered, row-major
    std::set<Cell> unordered_cells(Verdict v) const;   // (min,max)-normalized
    std::size_t count(Verdict v) const;

private:
    std::string label_;
    IndexRange a_, b_;
    Direction mode_;
    std::vector<Verdict> grid_;  // row-major over a
};

/// Exact verdict of x_a x_b vs x_{a+b} on the rectangle. Strict means the
/// mode's inequality holds strictly, Failure the strict reverse. Parallelized
/// over rows; the grid is assembled deterministically so the result is
/// independent of thread count. classify_pairs_serial is the reference
/// implementation.
PairClassification classify_pairs(const ExactSequence& seq, IndexRange a_range, IndexRange b_range,
                                  Direction mode);
PairClassification classify_pairs_serial(const ExactSequence& seq, IndexRange a_range,
                                         IndexRange b_range, Direction mode);

// ---------------------------------------------------------------------------

/// 1/(n-N+1) + sum_{j=2}^{m} (n-N)/((n-N+j-1)(n-N+j)), summed exactly.
/// Collapses to m/(n-N+m); callers assert that.
Rational verify_telescoping(std::size_t N, std::size_t n, std::size_t m);

/// The proof's auxiliary sequence: a_n = x_n for n >= N+k, and
/// a_{j-1} = a_j^2 / a_{j+1} descending to index 0.
ExactSequence extend_a_sequence(const ExactSequence& seq, std::size_t N, std::size_t k);

struct Theorem11Report {
    std::string label;
    Direction mode = Direction::Concave;
    std::size_t N = 0, k = 0, M = 0;
    std::size_t scan_box = 0;
    ThresholdReport threshold;
    bool log_concave_above_N = false;
    bool condition13_holds = false;
    std::optional<std::size_t> d;
    std::vector<Cell> failures;    // ordered cells from the [d, scan_box]^2 grid
    std::vector<Cell> equalities;
    // Failures outside [d,M+1]x[d,N+k] u [d,N+k]x[d,M+1]. Non-empty means a
    // defect in this implementation (or its inputs), not in the theorem;
    // flagged for review and pass is false.
    std::vector<Cell> outside_failures;
    bool pass = false;
};

/// Composite check: log-behavior scan, Condition (1.3), the d search, then a
/// pair classification on [d, scan_box]^2 with the failure set confined to
/// the theorem's rectangle union. Requires the run to cover 2*scan_box + 1.
Theorem11Report verify_theorem_11(const ExactSequence& seq, std::size_t N, std::size_t k,
                                  std::size_t M, std::size_t scan_box,
                                  Direction mode = Direction::Concave);

// ---------------------------------------------------------------------------

struct MAryRowResult {
    std::string row;               // human-readable row description
    std::size_t cells_checked = 0;
    std::vector<Cell> mismatches;  // computed verdict differs from the row's claim
};

struct MAryTableReport {
    unsigned m = 0;
    std::size_t beta_horizon = 0;
    std::vector<MAryRowResult> rows;
    // Diagonal-block cells the table claims Equal but that compute Strict
    // (exactly the near corner alpha+beta < 3m; see tables.hpp). Reported,
    // not counted as mismatches.
    std::vector<Cell> block_strict_corners;
    // Computed Equal/Failure cells in the box not covered by any table row.
    std::vector<Cell> unexpected_cells;
    bool pass = false;
};

/// Classifies b^m pairs over [1, beta_horizon]^2 and checks every row of the
/// m-ary table (congruence rows, sporadic cells, diagonal block) cell by
/// cell. Requires m >= 2 and beta_horizon >= 4m.
MAryTableReport verify_mary_table(unsigned m, std::size_t beta_horizon);

}  // namespace partlog
