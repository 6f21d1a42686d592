#pragma once

#include "partlog/analysis.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace partlog {

enum class PaperTableId {
    BessenrodtOno,            // p(n) failures/equalities in [2,26]^2
    Table1_Pd,                // distinct-parts equality/failure rows
    Table2_p2,                // square-parts equality/failure rows
    Table3_Nk,                // smallest N_k for p^k, k = 2..6
    Table4_mary,              // m-ary equality/failure rows per m
    OverpartitionEqualities,  // (1,1), (1,2) plus the axis rows
};

PaperTableId parse_table_id(const std::string& text);
const char* to_string(PaperTableId id);

// Row shapes mirroring how the source tables state their claims. Explicit
// rows (cell lists, blocks) take precedence over pattern rows (congruence
// classes, complement ranges) when both touch a cell.
struct RowCells { Verdict verdict; std::vector<Cell> cells; };                         // explicit (a,b) list
struct RowBList { Verdict verdict; std::size_t a; std::vector<std::size_t> bs; };      // fixed a, listed b
struct RowAllBFrom { Verdict verdict; std::size_t a; std::size_t b_min; };             // fixed a, all b >= b_min
struct RowBExcept { Verdict verdict; std::size_t a; std::vector<std::size_t> except_bs; };  // fixed a, all b >= 1 not listed
struct RowCongruence { Verdict verdict; std::size_t a; unsigned modulus; std::vector<unsigned> residues; };
struct RowBlock { Verdict verdict; IndexRange a_range; IndexRange b_range; };

using TableRow = std::variant<RowCells, RowBList, RowAllBFrom, RowBExcept, RowCongruence, RowBlock>;

struct VerdictTable {
    std::string title;
    std::vector<TableRow> rows;
};

std::string describe_row(const TableRow& row);

/// Ordered in-box cells a row claims, with the row's verdict. Pattern rows
/// clip silently; explicit cells outside the box are reported by
/// reproduce_table as a box-too-small error.
std::vector<std::pair<Cell, Verdict>> row_cells(const TableRow& row, IndexRange a_box, IndexRange b_box);

/// Unordered-normalized claim map with explicit-over-pattern precedence.
/// Conflicting claims at equal precedence indicate a transcription bug and
/// throw std::logic_error.
std::map<Cell, Verdict> expand_rows(const VerdictTable& table, IndexRange a_box, IndexRange b_box);

// Embedded transcriptions.
VerdictTable bessenrodt_ono_table();
VerdictTable distinct_parts_table();
VerdictTable square_parts_table();
VerdictTable mary_table(unsigned m);  // explicit for m = 2..5, general pattern for m >= 6
VerdictTable overpartition_equalities_table();

/// (k, smallest N_k such that p^k is log-concave for all n > N_k), k = 2..6.
const std::vector<std::pair<unsigned, std::size_t>>& power_thresholds();

// ---------------------------------------------------------------------------

struct TableDiff {
    std::size_t match_count = 0;
    std::vector<std::pair<Cell, Verdict>> missing_in_computed;  // claimed, not observed
    std::vector<std::pair<Cell, Verdict>> extra_in_computed;    // observed, not claimed
    bool clean() const { return missing_in_computed.empty() && extra_in_computed.empty(); }
};

struct Table3Entry {
    unsigned k = 0;
    std::size_t expected_N = 0;
    std::optional<std::size_t> computed_N;  // empty when skipped
    bool match = false;
};

struct ReproduceOptions {
    std::optional<IndexRange> a_box;
    std::optional<IndexRange> b_box;
    unsigned mary_m = 2;
    unsigned table3_max_k = 2;  // 3 is a minutes-scale run; 4..6 are long runs
};

struct TableReport {
    PaperTableId id;
    IndexRange a_box{0, 0}, b_box{0, 0};
    std::optional<TableDiff> diff;       // grid tables
    std::vector<Table3Entry> thresholds; // Table3 only
    bool pass = false;
};

/// Computes verdicts (or thresholds) for the table's family, normalizes
/// symmetry, and diffs against the embedded rows.
TableReport reproduce_table(PaperTableId id, const ReproduceOptions& opts = {});

}  // namespace partlog
