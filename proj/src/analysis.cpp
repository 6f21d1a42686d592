#include "partlog/analysis.hpp"

#include "partlog/tables.hpp"

#include <algorithm>
#include <stdexcept>

namespace partlog {

Direction parse_direction(const std::string& text) {
    if (text == "concave") return Direction::Concave;
    if (text == "convex") return Direction::Convex;
    throw std::invalid_argument("direction: expected 'concave' or 'convex', got '" + text + "'");
}

const char* to_string(Direction d) { return d == Direction::Concave ? "concave" : "convex"; }

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Strict: return "strict";
        case Verdict::Equal: return "equal";
        default: return "failure";
    }
}

namespace {

void require_covers(const ExactSequence& seq, std::size_t n, const char* op) {
    if (!seq.covers(n))
        throw std::out_of_range(std::string(op) + ": sequence '" + seq.label() +
                                "' does not cover index " + std::to_string(n));
}

void require_positive(const ExactSequence& seq, std::size_t lo, std::size_t hi, const char* op) {
    for (std::size_t n = lo; n <= hi; ++n)
        if (!seq.at(n).is_positive())
            throw std::domain_error(std::string(op) + ": non-positive value at index " +
                                    std::to_string(n) + " in '" + seq.label() + "'");
}

// Violation of the mode's log-inequality at n: concave wants x_n^2 >= x_{n-1}x_{n+1}.
bool log_violation_at(const ExactSequence& seq, std::size_t n, Direction mode) {
    const int c = (seq.at(n) * seq.at(n)).compare(seq.at(n - 1) * seq.at(n + 1));
    return mode == Direction::Concave ? c < 0 : c > 0;
}

ThresholdReport scan_impl(const ExactSequence& seq, Direction mode, std::size_t horizon,
                          std::optional<std::size_t> first_checked, bool parallel) {
    const std::size_t first = first_checked.value_or(seq.start_index() + 1);
    if (first <= seq.start_index())
        throw std::invalid_argument("scan_log_behavior: first_checked must exceed start_index");
    if (horizon < first)
        throw std::invalid_argument("scan_log_behavior: horizon below first checked index");
    require_covers(seq, horizon + 1, "scan_log_behavior");
    require_positive(seq, first - 1, horizon + 1, "scan_log_behavior");

    std::vector<std::uint8_t> bad(horizon - first + 1, 0);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(bad.size()); ++i)
            bad[i] = log_violation_at(seq, first + static_cast<std::size_t>(i), mode);
    } else {
        for (std::size_t i = 0; i < bad.size(); ++i) bad[i] = log_violation_at(seq, first + i, mode);
    }

    ThresholdReport report;
    report.label = seq.label();
    report.mode = mode;
    report.first_checked = first;
    report.horizon = horizon;
    for (std::size_t i = 0; i < bad.size(); ++i)
        if (bad[i]) report.violations.push_back(first + i);
    report.candidate_N = report.violations.empty() ? first - 1 : report.violations.back();
    return report;
}

}  // namespace

ThresholdReport scan_log_behavior(const ExactSequence& seq, Direction mode, std::size_t horizon,
                                  std::optional<std::size_t> first_checked) {
    return scan_impl(seq, mode, horizon, first_checked, true);
}

ThresholdReport scan_log_behavior_serial(const ExactSequence& seq, Direction mode, std::size_t horizon,
                                         std::optional<std::size_t> first_checked) {
    return scan_impl(seq, mode, horizon, first_checked, false);
}

bool check_condition_13(const ExactSequence& seq, std::size_t N, std::size_t k, Direction mode) {
    require_covers(seq, N + k + 1, "check_condition_13");
    const Ordering o = compare_powers(seq.at(N + k), N + k + 1, seq.at(N + k + 1), N + k).ordering;
    return mode == Direction::Concave ? o != Ordering::Less : o != Ordering::Greater;
}

std::optional<std::size_t> find_min_k(const ExactSequence& seq, std::size_t N, std::size_t k_max,
                                      Direction mode) {
    require_covers(seq, N + k_max + 1, "find_min_k");
    for (std::size_t k = 0; k <= k_max; ++k)
        if (check_condition_13(seq, N, k, mode)) return k;
    return std::nullopt;
}

namespace {

// (x_{M+1}/x_M)^m <= x_m cross-multiplied: x_{M+1}^m vs x_m * x_M^m.
bool ratio_condition_holds(const ExactSequence& seq, std::size_t M, std::size_t m, Direction mode) {
    const Ordering o = compare_products({{seq.at(M + 1), m}},
                                        {{seq.at(m), 1}, {seq.at(M), m}}).ordering;
    return mode == Direction::Concave ? o != Ordering::Greater : o != Ordering::Less;
}

}  // namespace

std::optional<std::size_t> find_d_M(const ExactSequence& seq, std::size_t N, std::size_t k,
                                    std::size_t M, Direction mode) {
    if (M < N + k) throw std::invalid_argument("find_d_M: requires M >= N + k");
    require_covers(seq, M + 1, "find_d_M");
    const std::size_t target = N + k;
    if (target == 0) return 1;  // empty m-range, vacuously satisfied
    std::size_t d = 0;
    for (std::size_t m = target; m >= 1; --m) {
        if (!ratio_condition_holds(seq, M, m, mode)) break;
        d = m;
    }
    if (d == 0) return std::nullopt;
    return d;
}

ConditionReport condition_report(const ExactSequence& seq, std::size_t N, std::size_t k,
                                 std::optional<std::size_t> M, Direction mode) {
    ConditionReport report;
    report.N = N;
    report.k = k;
    report.condition13_holds = check_condition_13(seq, N, k, mode);
    if (M) {
        report.M = M;
        report.d = find_d_M(seq, N, k, *M, mode);
        for (std::size_t m = 1; m <= N + k; ++m)
            if (!ratio_condition_holds(seq, *M, m, mode)) report.witness_failures.push_back(m);
    }
    return report;
}

BoundsCheck check_bounds_12(const ExactSequence& seq, std::size_t N, std::size_t n, std::size_t m,
                            Direction mode) {
    if (n <= N) throw std::invalid_argument("check_bounds_12: requires n > N");
    require_covers(seq, n + m, "check_bounds_12");
    require_covers(seq, N, "check_bounds_12");
    require_positive(seq, N, n + m, "check_bounds_12");
    for (std::size_t j = N + 1; j + 1 <= n + m && j >= 1; ++j)
        if (log_violation_at(seq, j, mode))
            throw std::domain_error("check_bounds_12: log-behavior precondition violated at index " +
                                    std::to_string(j));

    const std::size_t span = n - N;
    // lower: x_N^m * x_{n+m}^{n-N} vs x_n^{n-N+m}
    const Ordering lower = compare_products({{seq.at(N), m}, {seq.at(n + m), span}},
                                            {{seq.at(n), span + m}}).ordering;
    // upper: x_n * x_N^{n-N-1} vs x_{N+1}^{n-N}
    const Ordering upper = compare_products({{seq.at(n), 1}, {seq.at(N), span - 1}},
                                            {{seq.at(N + 1), span}}).ordering;
    BoundsCheck out;
    if (mode == Direction::Concave) {
        out.lower_holds = lower != Ordering::Greater;
        out.upper_holds = upper != Ordering::Greater;
    } else {
        out.lower_holds = lower != Ordering::Less;
        out.upper_holds = upper != Ordering::Less;
    }
    return out;
}

// ---------------------------------------------------------------------------

PairClassification::PairClassification(std::string label, IndexRange a_range, IndexRange b_range,
                                       Direction mode)
    : label_(std::move(label)), a_(a_range), b_(b_range), mode_(mode),
      grid_(a_range.width() * b_range.width(), Verdict::Strict) {
    if (a_.hi < a_.lo || b_.hi < b_.lo)
        throw std::invalid_argument("PairClassification: empty index range");
}

Verdict PairClassification::at(std::size_t a, std::size_t b) const {
    if (a < a_.lo || a > a_.hi || b < b_.lo || b > b_.hi)
        throw std::out_of_range("PairClassification: cell outside ranges");
    return grid_[(a - a_.lo) * b_.width() + (b - b_.lo)];
}

void PairClassification::set(std::size_t a, std::size_t b, Verdict v) {
    grid_[(a - a_.lo) * b_.width() + (b - b_.lo)] = v;
}

std::vector<Cell> PairClassification::cells(Verdict v) const {
    std::vector<Cell> out;
    for (std::size_t a = a_.lo; a <= a_.hi; ++a)
        for (std::size_t b = b_.lo; b <= b_.hi; ++b)
            if (at(a, b) == v) out.emplace_back(a, b);
    return out;
}

std::set<Cell> PairClassification::unordered_cells(Verdict v) const {
    std::set<Cell> out;
    for (const Cell& c : cells(v)) out.insert({std::min(c.first, c.second), std::max(c.first, c.second)});
    return out;
}

std::size_t PairClassification::count(Verdict v) const {
    return static_cast<std::size_t>(std::count(grid_.begin(), grid_.end(), v));
}

namespace {

Verdict pair_verdict(const ExactSequence& seq, std::size_t a, std::size_t b, Direction mode) {
    const int c = (seq.at(a) * seq.at(b)).compare(seq.at(a + b));
    if (c == 0) return Verdict::Equal;
    if (mode == Direction::Concave) return c > 0 ? Verdict::Strict : Verdict::Failure;
    return c < 0 ? Verdict::Strict : Verdict::Failure;
}

PairClassification classify_impl(const ExactSequence& seq, IndexRange a_range, IndexRange b_range,
                                 Direction mode, bool parallel) {
    require_covers(seq, a_range.lo, "classify_pairs");
    require_covers(seq, b_range.lo, "classify_pairs");
    require_covers(seq, a_range.hi + b_range.hi, "classify_pairs");
    PairClassification out(seq.label(), a_range, b_range, mode);
    const long long rows = static_cast<long long>(a_range.width());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < rows; ++i) {
            const std::size_t a = a_range.lo + static_cast<std::size_t>(i);
            for (std::size_t b = b_range.lo; b <= b_range.hi; ++b)
                out.set(a, b, pair_verdict(seq, a, b, mode));
        }
    } else {
        for (long long i = 0; i < rows; ++i) {
            const std::size_t a = a_range.lo + static_cast<std::size_t>(i);
            for (std::size_t b = b_range.lo; b <= b_range.hi; ++b)
                out.set(a, b, pair_verdict(seq, a, b, mode));
        }
    }
    return out;
}

}  // namespace

PairClassification classify_pairs(const ExactSequence& seq, IndexRange a_range, IndexRange b_range,
                                  Direction mode) {
    return classify_impl(seq, a_range, b_range, mode, true);
}

PairClassification classify_pairs_serial(const ExactSequence& seq, IndexRange a_range,
                                         IndexRange b_range, Direction mode) {
    return classify_impl(seq, a_range, b_range, mode, false);
}

// ---------------------------------------------------------------------------

Rational verify_telescoping(std::size_t N, std::size_t n, std::size_t m) {
    if (n <= N) throw std::invalid_argument("verify_telescoping: requires n > N");
    if (m < 1) throw std::invalid_argument("verify_telescoping: requires m >= 1");
    const unsigned long span = n - N;
    Rational sum(mpz_class(1), mpz_class(span + 1));
    for (unsigned long j = 2; j <= m; ++j)
        sum += Rational(mpz_class(span), mpz_class(span + j - 1) * mpz_class(span + j));
    return sum;
}

ExactSequence extend_a_sequence(const ExactSequence& seq, std::size_t N, std::size_t k) {
    if (seq.start_index() != 0)
        throw std::invalid_argument("extend_a_sequence: run must start at index 0");
    require_covers(seq, N + k + 1, "extend_a_sequence");
    require_positive(seq, 0, seq.max_index(), "extend_a_sequence");
    std::vector<Rational> a(seq.values().begin(), seq.values().end());
    for (std::size_t t = N + k; t-- > 0;)
        a[t] = a[t + 1] * a[t + 1] / a[t + 2];
    return make_sequence("a[" + std::to_string(N + k) + "](" + seq.label() + ")", std::move(a));
}

Theorem11Report verify_theorem_11(const ExactSequence& seq, std::size_t N, std::size_t k,
                                  std::size_t M, std::size_t scan_box, Direction mode) {
    Theorem11Report report;
    report.label = seq.label();
    report.mode = mode;
    report.N = N;
    report.k = k;
    report.M = M;
    report.scan_box = scan_box;
    require_covers(seq, 2 * scan_box + 1, "verify_theorem_11");

    report.threshold = scan_log_behavior(seq, mode, 2 * scan_box);
    report.log_concave_above_N =
        report.threshold.violations.empty() || report.threshold.violations.back() <= N;
    report.condition13_holds = check_condition_13(seq, N, k, mode);
    report.d = find_d_M(seq, N, k, M, mode);
    if (!report.log_concave_above_N || !report.condition13_holds || !report.d) return report;

    const std::size_t d = *report.d;
    if (d > scan_box) throw std::invalid_argument("verify_theorem_11: scan_box below d");
    const auto grid = classify_pairs(seq, {d, scan_box}, {d, scan_box}, mode);
    report.failures = grid.cells(Verdict::Failure);
    report.equalities = grid.cells(Verdict::Equal);
    const auto inside = [&](const Cell& c) {
        const auto in = [](std::size_t v, std::size_t lo, std::size_t hi) { return v >= lo && v <= hi; };
        return (in(c.first, d, M + 1) && in(c.second, d, N + k)) ||
               (in(c.first, d, N + k) && in(c.second, d, M + 1));
    };
    for (const Cell& c : report.failures)
        if (!inside(c)) report.outside_failures.push_back(c);
    report.pass = report.outside_failures.empty();
    return report;
}

// ---------------------------------------------------------------------------

MAryTableReport verify_mary_table(unsigned m, std::size_t beta_horizon) {
    if (m < 2) throw std::invalid_argument("verify_mary_table: requires m >= 2");
    if (beta_horizon < 4ul * m) throw std::invalid_argument("verify_mary_table: horizon below 4m");

    MAryTableReport report;
    report.m = m;
    report.beta_horizon = beta_horizon;

    const ExactSequence seq = generate(PartitionFamily(MAry{m}), 2 * beta_horizon);
    const IndexRange box{1, beta_horizon};
    const PairClassification grid = classify_pairs(seq, box, box, Direction::Concave);

    const VerdictTable table = mary_table(m);
    const auto expected = expand_rows(table, box, box);

    const auto normalized = [](const Cell& c) {
        return Cell{std::min(c.first, c.second), std::max(c.first, c.second)};
    };
    std::set<Cell> corners;
    bool ok = true;
    for (const TableRow& row : table.rows) {
        MAryRowResult result;
        result.row = describe_row(row);
        for (const auto& [cell, verdict] : row_cells(row, box, box)) {
            ++result.cells_checked;
            Verdict want = verdict;
            const bool block_cell = std::holds_alternative<RowBlock>(row);
            if (block_cell && cell.first + cell.second < 3ul * m) {
                // Known over-claim in the diagonal block: the near corner
                // (alpha + beta < 3m) computes Strict, not Equal.
                want = Verdict::Strict;
            }
            const Verdict got = grid.at(cell.first, cell.second);
            if (got != want)
                result.mismatches.push_back(cell);
            else if (block_cell && want == Verdict::Strict)
                corners.insert(normalized(cell));
        }
        ok = ok && result.mismatches.empty();
        report.rows.push_back(std::move(result));
    }
    report.block_strict_corners.assign(corners.begin(), corners.end());

    // Exhaustiveness: every computed Equal/Failure must be claimed by a row.
    for (Verdict v : {Verdict::Equal, Verdict::Failure}) {
        for (const Cell& c : grid.unordered_cells(v)) {
            const auto it = expected.find(c);
            if (it == expected.end() || it->second != v) report.unexpected_cells.push_back(c);
        }
    }
    std::sort(report.unexpected_cells.begin(), report.unexpected_cells.end());
    ok = ok && report.unexpected_cells.empty();
    report.pass = ok;
    return report;
}

}  // namespace partlog
