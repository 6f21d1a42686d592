// partlog: exact verdicts on log-concavity, root conditions, and
// multiplicative abundance for restricted partition families.

#include <CLI11.hpp>
#include <json.hpp>

#include "partlog/analysis.hpp"
#include "partlog/cache.hpp"
#include "partlog/examples.hpp"
#include "partlog/logpoly.hpp"
#include "partlog/tables.hpp"

#include <iostream>

using namespace partlog;
using Json = nlohmann::ordered_json;

namespace {

enum class OutputFormat { Markdown, JsonOut, Csv };

struct GlobalOpts {
    bool json = false;
    bool csv = false;
    OutputFormat format() const {
        return json ? OutputFormat::JsonOut : csv ? OutputFormat::Csv : OutputFormat::Markdown;
    }
};

Json cells_json(const std::vector<Cell>& cells) {
    Json out = Json::array();
    for (const Cell& c : cells) out.push_back({c.first, c.second});
    return out;
}

Json cells_json(const std::set<Cell>& cells) {
    return cells_json(std::vector<Cell>(cells.begin(), cells.end()));
}

std::string cells_markdown(const std::set<Cell>& cells) {
    if (cells.empty()) return "none";
    std::string out;
    for (const Cell& c : cells) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
    }
    return out;
}

void emit(const GlobalOpts& opts, const Json& report, const std::string& markdown) {
    if (opts.format() == OutputFormat::JsonOut)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << markdown;
}

IndexRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("range", "expected LO..HI, got '" + text + "'");
    IndexRange r;
    r.lo = std::stoull(text.substr(0, dots));
    r.hi = std::stoull(text.substr(dots + 2));
    if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range '" + text + "'");
    return r;
}

// "A1..A2xB1..B2"
std::pair<IndexRange, IndexRange> parse_box(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos)
        throw CLI::ValidationError("box", "expected A1..A2xB1..B2, got '" + text + "'");
    return {parse_range(text.substr(0, x)), parse_range(text.substr(x + 1))};
}

// ---------------------------------------------------------------------------

int cmd_gen(const GlobalOpts& opts, const std::string& family_text, std::size_t upto,
            const std::string& out_file) {
    const PartitionFamily family = PartitionFamily::parse(family_text);
    const CacheConfig cache = CacheConfig::from_env();
    const ExactSequence seq = cached_generate(cache, family, upto);
    std::filesystem::path path = cache_path(cache, family.canonical());
    if (!out_file.empty()) {
        path = out_file;
        // the cached run may be longer than requested; the explicit file is exact
        std::vector<Rational> run(seq.values().begin(), seq.values().begin() + upto + 1);
        write_sequence_file(path, ExactSequence(seq.label(), 0, std::move(run)));
    }
    Json report = {{"command", "gen"},
                   {"inputs", {{"family", family.canonical()}, {"upto", upto}}},
                   {"path", path.string()},
                   {"count", upto + 1},
                   {"value_at_upto", seq.at(upto).str()},
                   {"pass", true}};
    emit(opts, report,
         "wrote " + path.string() + " (" + std::to_string(upto + 1) + " values, " +
             family.canonical() + "[" + std::to_string(upto) + "] = " + seq.at(upto).str() + ")\n");
    return 0;
}

int cmd_scan(const GlobalOpts& opts, const std::string& family_text, const std::string& box_text,
             const std::string& mode_text) {
    const PartitionFamily family = PartitionFamily::parse(family_text);
    const auto [a_box, b_box] = parse_box(box_text);
    const Direction mode = parse_direction(mode_text);
    const ExactSequence seq =
        cached_generate(CacheConfig::from_env(), family, a_box.hi + b_box.hi);
    const PairClassification grid = classify_pairs(seq, a_box, b_box, mode);

    if (opts.format() == OutputFormat::Csv) {
        std::cout << "a,b,verdict\n";
        for (std::size_t a = a_box.lo; a <= a_box.hi; ++a)
            for (std::size_t b = b_box.lo; b <= b_box.hi; ++b)
                std::cout << a << "," << b << "," << to_string(grid.at(a, b)) << "\n";
        return 0;
    }

    const auto equalities = grid.unordered_cells(Verdict::Equal);
    const auto failures = grid.unordered_cells(Verdict::Failure);
    Json report = {{"command", "scan"},
                   {"inputs",
                    {{"family", family.canonical()},
                     {"box", box_text},
                     {"mode", to_string(mode)}}},
                   {"verdicts",
                    {{"strict", grid.count(Verdict::Strict)},
                     {"equalities", cells_json(equalities)},
                     {"failures", cells_json(failures)}}},
                   {"pass", true}};
    std::string md;
    md += "# scan " + family.canonical() + " " + box_text + " (" + to_string(mode) + ")\n\n";
    md += "| Equality at (a,b) | Failure at (a,b) |\n|---|---|\n";
    md += "| " + cells_markdown(equalities) + " | " + cells_markdown(failures) + " |\n\n";
    md += "strict cells: " + std::to_string(grid.count(Verdict::Strict)) + "\n";
    emit(opts, report, md);
    return 0;
}

int cmd_threshold(const GlobalOpts& opts, const std::string& family_text, std::size_t horizon,
                  const std::string& mode_text) {
    const PartitionFamily family = PartitionFamily::parse(family_text);
    const Direction mode = parse_direction(mode_text);
    const ExactSequence seq = cached_generate(CacheConfig::from_env(), family, horizon + 1);
    const ThresholdReport report = scan_log_behavior(seq, mode, horizon);
    Json j = {{"command", "threshold"},
              {"inputs",
               {{"family", family.canonical()}, {"horizon", horizon}, {"mode", to_string(mode)}}},
              {"verdicts",
               {{"candidate_N", report.candidate_N},
                {"violation_count", report.violations.size()},
                {"violations", report.violations}}},
              {"pass", true}};
    std::string md = "candidate_N = " + std::to_string(report.candidate_N) + " (" +
                     std::to_string(report.violations.size()) + " violations up to horizon " +
                     std::to_string(horizon) + ")\n";
    emit(opts, j, md);
    return 0;
}

int cmd_condition(const GlobalOpts& opts, const std::string& family_text, std::size_t N,
                  std::size_t k, std::int64_t M_raw, const std::string& mode_text) {
    const PartitionFamily family = PartitionFamily::parse(family_text);
    const Direction mode = parse_direction(mode_text);
    std::optional<std::size_t> M;
    if (M_raw >= 0) M = static_cast<std::size_t>(M_raw);
    const std::size_t need = std::max(N + k + 1, M ? *M + 1 : 0);
    const ExactSequence seq = cached_generate(CacheConfig::from_env(), family, need);
    const ConditionReport report = condition_report(seq, N, k, M, mode);
    const bool pass = report.condition13_holds && (!M || report.d.has_value());
    Json j = {{"command", "condition"},
              {"inputs",
               {{"family", family.canonical()},
                {"N", N},
                {"k", k},
                {"M", M ? Json(*M) : Json(nullptr)},
                {"mode", to_string(mode)}}},
              {"verdicts",
               {{"condition13_holds", report.condition13_holds},
                {"d", report.d ? Json(*report.d) : Json(nullptr)},
                {"ratio_condition_failures", report.witness_failures}}},
              {"pass", pass}};
    std::string md = std::string("condition (1.3): ") +
                     (report.condition13_holds ? "holds" : "fails") + " at N=" + std::to_string(N) +
                     ", k=" + std::to_string(k) + "\n";
    if (M) {
        md += "d = " + (report.d ? std::to_string(*report.d) : std::string("none")) +
              " at M=" + std::to_string(*M) + "\n";
    }
    emit(opts, j, md);
    return pass ? 0 : 1;
}

int cmd_bounds(const GlobalOpts& opts, const std::string& family_text, std::size_t N, std::size_t n,
               std::size_t m, const std::string& mode_text) {
    const PartitionFamily family = PartitionFamily::parse(family_text);
    const Direction mode = parse_direction(mode_text);
    const ExactSequence seq = cached_generate(CacheConfig::from_env(), family, n + m + 1);
    const BoundsCheck bounds = check_bounds_12(seq, N, n, m, mode);
    const bool pass = bounds.lower_holds && bounds.upper_holds;
    Json j = {{"command", "bounds"},
              {"inputs",
               {{"family", family.canonical()},
                {"N", N},
                {"n", n},
                {"m", m},
                {"mode", to_string(mode)}}},
              {"verdicts", {{"lower_holds", bounds.lower_holds}, {"upper_holds", bounds.upper_holds}}},
              {"pass", pass}};
    emit(opts, j,
         std::string("lower: ") + (bounds.lower_holds ? "holds" : "fails") +
             ", upper: " + (bounds.upper_holds ? "holds" : "fails") + "\n");
    return pass ? 0 : 1;
}

Json diff_json(const TableDiff& diff) {
    Json missing = Json::array(), extra = Json::array();
    for (const auto& [cell, v] : diff.missing_in_computed)
        missing.push_back({{"cell", {cell.first, cell.second}}, {"verdict", to_string(v)}});
    for (const auto& [cell, v] : diff.extra_in_computed)
        extra.push_back({{"cell", {cell.first, cell.second}}, {"verdict", to_string(v)}});
    return {{"match_count", diff.match_count},
            {"missing_in_computed", missing},
            {"extra_in_computed", extra}};
}

int cmd_verify(const GlobalOpts& opts, const std::string& table_text, const std::string& box_text,
               unsigned mary_m, bool with_k3, bool allow_long_run) {
    const PaperTableId id = parse_table_id(table_text);
    ReproduceOptions options;
    options.mary_m = mary_m;
    options.table3_max_k = allow_long_run ? 6 : with_k3 ? 3 : 2;
    if (!box_text.empty()) {
        const auto [a_box, b_box] = parse_box(box_text);
        options.a_box = a_box;
        options.b_box = b_box;
    }
    const TableReport report = reproduce_table(id, options);

    Json j = {{"command", "verify"},
              {"inputs", {{"table", table_text}, {"box", box_text.empty() ? "default" : box_text},
                          {"m", mary_m}}},
              {"pass", report.pass}};
    std::string md = std::string("table ") + to_string(id) + ": ";
    if (report.diff) {
        j["diff"] = diff_json(*report.diff);
        md += report.pass ? "match" : "MISMATCH";
        md += " (" + std::to_string(report.diff->match_count) + " cells matched, " +
              std::to_string(report.diff->missing_in_computed.size()) + " missing, " +
              std::to_string(report.diff->extra_in_computed.size()) + " extra)\n";
        for (const auto& [cell, v] : report.diff->missing_in_computed)
            md += "  missing: (" + std::to_string(cell.first) + "," + std::to_string(cell.second) +
                  ") expected " + to_string(v) + "\n";
        for (const auto& [cell, v] : report.diff->extra_in_computed)
            md += "  extra: (" + std::to_string(cell.first) + "," + std::to_string(cell.second) +
                  ") computed " + to_string(v) + "\n";
    } else {
        Json rows = Json::array();
        md += report.pass ? "match\n" : "MISMATCH\n";
        for (const Table3Entry& e : report.thresholds) {
            rows.push_back({{"k", e.k},
                            {"expected_N", e.expected_N},
                            {"computed_N", e.computed_N ? Json(*e.computed_N) : Json(nullptr)},
                            {"match", e.computed_N ? Json(e.match) : Json("skipped")}});
            md += "  k=" + std::to_string(e.k) + ": expected " + std::to_string(e.expected_N) +
                  ", computed " + (e.computed_N ? std::to_string(*e.computed_N) : "skipped") + "\n";
        }
        j["diff"] = rows;
    }
    emit(opts, j, md);
    return report.pass ? 0 : 1;
}

int cmd_example(const GlobalOpts& opts, const std::string& kind_text, std::size_t upto) {
    const ExampleKind kind = parse_example_kind(kind_text);
    bool pass = true;
    Json verdicts;
    std::string md;

    switch (kind) {
        case ExampleKind::GeomMinusHalf:
        case ExampleKind::GeomMinusHalfReciprocal: {
            const Remark1Report r = verify_remark1(kind, upto ? upto : 20);
            pass = r.pass;
            verdicts = {{"strictly_log_monotone", r.strictly_log_monotone},
                        {"condition13_always_false", r.condition13_always_false},
                        {"multiplicative_side_strict", r.multiplicative_side_strict},
                        {"roots_strictly_monotone", r.roots_strictly_monotone}};
            md = std::string(to_string(kind)) + ": " + (pass ? "all claims hold\n" : "FAILED\n");
            break;
        }
        case ExampleKind::SplicedRatio: {
            const Example5Report r = verify_example5();
            pass = r.pass;
            verdicts = {{"log_concave_from_25", r.log_concave_from_25},
                        {"roots_below_ratio_26_25", r.roots_below_ratio_26_25},
                        {"ratio_chain_holds", r.ratio_chain_holds},
                        {"roots_above_ratio_27_26", r.roots_above_ratio_27_26},
                        {"d_at_M26", r.d_at_M26 ? Json(*r.d_at_M26) : Json(nullptr)},
                        {"d_at_M25", r.d_at_M25 ? Json(*r.d_at_M25) : Json(nullptr)},
                        {"failure_count", r.theorem.failures.size()},
                        {"failures_within_25_box", r.failures_within_25_box}};
            md = std::string("spliced: ") + (pass ? "all claims hold" : "FAILED") + " (" +
                 std::to_string(r.theorem.failures.size()) + " failures, all within [1,25]^2)\n";
            break;
        }
        case ExampleKind::Fibonacci: {
            const std::size_t limit = upto ? upto : 60;
            const ExactSequence fib = example_values(kind, 2 * limit + 2);
            bool identities = true;
            for (std::size_t n = 1; n <= limit && identities; ++n)
                for (std::size_t m = 1; m <= limit; ++m)
                    if (!fibonacci_identities(n, m).addition_identity_holds) {
                        identities = false;
                        break;
                    }
            const auto grid = classify_pairs(fib, {1, limit}, {1, limit}, Direction::Convex);
            const bool deficient = grid.count(Verdict::Failure) == 0 &&
                                   grid.unordered_cells(Verdict::Equal) == std::set<Cell>{{1, 1}};
            // Condition (1.3) dual over a small grid: the convex-side root
            // condition holds everywhere, the concave side only at the
            // degenerate F_1 = F_2 step.
            Json condition_grid = Json::array();
            bool convex_all = true;
            for (std::size_t N = 1; N <= 4; ++N)
                for (std::size_t k = 0; k <= 4; ++k) {
                    const bool concave = check_condition_13(fib, N, k, Direction::Concave);
                    const bool convex = check_condition_13(fib, N, k, Direction::Convex);
                    convex_all = convex_all && convex;
                    condition_grid.push_back(
                        {{"N", N}, {"k", k}, {"concave", concave}, {"convex", convex}});
                }
            pass = identities && deficient && convex_all;
            verdicts = {{"identities_hold", identities},
                        {"deficient_with_unique_equality", deficient},
                        {"condition_grid", condition_grid}};
            md = std::string("fibonacci: ") + (pass ? "all claims hold\n" : "FAILED\n");
            break;
        }
        case ExampleKind::Periodic2343: {
            const std::size_t limit = upto ? upto : 100;
            const ExactSequence a = example_values(kind, 2 * limit + 2);
            bool log_pattern = true;
            for (std::size_t n = 1; n <= limit; ++n) {
                const int c = (a.at(n) * a.at(n)).compare(a.at(n - 1) * a.at(n + 1));
                if (n % 4 == 0 && c >= 0) log_pattern = false;
                if (n % 4 == 2 && c <= 0) log_pattern = false;
            }
            const auto grid = classify_pairs(a, {0, limit}, {0, limit}, Direction::Concave);
            bool roots = true;
            for (std::size_t n = 1; n <= limit; ++n) {
                const Ordering o = compare_powers(a.at(n + 1), n + 2, a.at(n + 2), n + 1).ordering;
                if ((o != Ordering::Greater) != (n % 4 == 0 || n % 4 == 3)) roots = false;
            }
            pass = log_pattern && grid.count(Verdict::Failure) == 0 && roots;
            verdicts = {{"log_pattern_mod4", log_pattern},
                        {"abundant_no_failures", grid.count(Verdict::Failure) == 0},
                        {"root_pattern_mod4", roots}};
            md = std::string("periodic2343: ") + (pass ? "all claims hold\n" : "FAILED\n");
            break;
        }
        case ExampleKind::TwoPowSqrt: {
            const std::size_t limit = upto ? upto : 200;
            bool log_concave = true;
            for (std::size_t n = 0; n <= limit; ++n)
                if (sqrt_family_compare(SqrtLogConcavity{n}).ordering != Ordering::Greater)
                    log_concave = false;
            bool submult = true;
            for (std::size_t n = 1; n <= 40; ++n)
                for (std::size_t m = 1; m <= 40; ++m)
                    if (sqrt_family_compare(SqrtSubMultiplicative{n, m}).ordering != Ordering::Less)
                        submult = false;
            const auto min_k = sqrt_find_min_k(0, 5);
            pass = log_concave && submult && min_k == 1;
            verdicts = {{"strictly_log_concave", log_concave},
                        {"submultiplicative", submult},
                        {"min_k_at_N0", min_k ? Json(*min_k) : Json(nullptr)}};
            md = std::string("two-pow-sqrt: ") + (pass ? "all claims hold\n" : "FAILED\n");
            break;
        }
    }

    Json j = {{"command", "example"},
              {"inputs", {{"kind", kind_text}, {"upto", upto}}},
              {"verdicts", verdicts},
              {"pass", pass}};
    emit(opts, j, md);
    return pass ? 0 : 1;
}

int cmd_logpoly(const GlobalOpts& opts, const std::string& r_text, const std::string& s_text,
                const std::string& t_text, std::size_t n_lo, std::size_t n_hi,
                const std::string& box_text) {
    const Rational r = Rational::from_string(r_text);
    const Rational s = Rational::from_string(s_text);
    const Rational t = Rational::from_string(t_text);

    Json verdicts;
    std::string md;
    bool pass = true;
    if (!s.is_one()) {
        const LogPolyData data = logpoly_data(r, s, t);
        const LogBehaviorReport behavior = empirical_log_behavior(r, s, t, n_lo, n_hi);
        pass = behavior.pass && behavior.kappa == data.kappa;
        verdicts = {{"kappa", data.kappa},
                    {"A_at_lo", data.A(static_cast<double>(n_lo))},
                    {"kappa_delta_sq_at_lo", data.kappa_delta_sq(static_cast<double>(n_lo))},
                    {"onset", behavior.onset},
                    {"mismatch_count", behavior.mismatches.size()}};
        md = "kappa = " + std::to_string(data.kappa) + ", empirical onset = " +
             std::to_string(behavior.onset) + " on [" + std::to_string(n_lo) + ", " +
             std::to_string(n_hi) + "]\n";
    } else {
        verdicts = {{"kappa", nullptr}};
        md = "s = 1: kappa undefined (boundary case)\n";
    }
    if (!box_text.empty()) {
        const auto [a_box, b_box] = parse_box(box_text);
        if (a_box.lo != b_box.lo || a_box.hi != b_box.hi)
            throw CLI::ValidationError("box", "logpoly scans use a square box");
        const AbundanceScanReport scan = theorem42_abundance_check(r, s, t, a_box);
        verdicts["abundance"] = {{"strict", scan.strict},
                                 {"equal", scan.equal},
                                 {"failure", scan.failure},
                                 {"onset", scan.onset},
                                 {"equal_everywhere", scan.equal_everywhere},
                                 {"unresolved_ties", scan.unresolved_ties}};
        md += "abundance scan: " + std::to_string(scan.failure) + " failures, onset " +
              std::to_string(scan.onset) +
              (scan.equal_everywhere ? ", exactly multiplicative\n" : "\n");
        pass = pass && scan.unresolved_ties == 0;
    }
    Json j = {{"command", "logpoly"},
              {"inputs", {{"r", r.str()}, {"s", s.str()}, {"t", t.str()}}},
              {"verdicts", verdicts},
              {"pass", pass}};
    emit(opts, j, md);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact log-concavity / abundance toolkit for restricted partition functions"};
    app.require_subcommand(1);
    GlobalOpts opts;
    app.add_flag("--json", opts.json, "emit a JSON report");
    app.add_flag("--csv", opts.csv, "emit CSV (scan grids only)");

    std::string family, box, mode = "concave", table, kind, out_file;
    std::string r_text = "0", s_text = "1/2", t_text = "1";
    std::size_t upto = 0, horizon = 0, N = 0, k = 0, n = 0, m = 0;
    std::size_t n_lo = 10, n_hi = 1000;
    std::int64_t M = -1;
    unsigned mary_m = 2;
    bool with_k3 = false, allow_long_run = false;

    CLI::App* gen = app.add_subcommand("gen", "generate a family run into the sequence cache");
    gen->fallthrough();
    gen->add_option("--family", family)->required();
    gen->add_option("--upto", upto)->required();
    gen->add_option("--out", out_file, "write to this file instead of the cache layout");

    CLI::App* scan = app.add_subcommand("scan", "classify x_a x_b vs x_{a+b} over a box");
    scan->fallthrough();
    scan->add_option("--family", family)->required();
    scan->add_option("--box", box, "A1..A2xB1..B2")->required();
    scan->add_option("--mode", mode, "concave|convex");

    CLI::App* threshold = app.add_subcommand("threshold", "log-behavior violations up to a horizon");
    threshold->fallthrough();
    threshold->add_option("--family", family)->required();
    threshold->add_option("--horizon", horizon)->required();
    threshold->add_option("--mode", mode);

    CLI::App* condition = app.add_subcommand("condition", "root condition and the d search");
    condition->fallthrough();
    condition->add_option("--family", family)->required();
    condition->add_option("--N", N)->required();
    condition->add_option("--k", k)->required();
    condition->add_option("--M", M, "enable the ratio-condition search");
    condition->add_option("--mode", mode);

    CLI::App* bounds = app.add_subcommand("bounds", "two-sided envelope check at (N, n, m)");
    bounds->fallthrough();
    bounds->add_option("--family", family)->required();
    bounds->add_option("--N", N)->required();
    bounds->add_option("--n", n)->required();
    bounds->add_option("--m", m)->required();
    bounds->add_option("--mode", mode);

    CLI::App* verify = app.add_subcommand("verify", "diff computed verdicts against an embedded table");
    verify->fallthrough();
    verify->add_option("--table", table)->required();
    verify->add_option("--box", box);
    verify->add_option("--m", mary_m, "m for Table4_mary");
    verify->add_flag("--with-k3", with_k3, "Table3: also verify k=3");
    verify->add_flag("--allow-long-run", allow_long_run, "Table3: verify k=3..6 (hours of compute)");

    CLI::App* example = app.add_subcommand("example", "verify a constructed-sequence example");
    example->fallthrough();
    example->add_option("--kind", kind)->required();
    example->add_option("--upto", upto);

    CLI::App* logpoly = app.add_subcommand("logpoly", "n^r e^{t n^s} sign data and scans");
    logpoly->fallthrough();
    logpoly->add_option("--r", r_text)->required();
    logpoly->add_option("--s", s_text)->required();
    logpoly->add_option("--t", t_text)->required();
    logpoly->add_option("--n-lo", n_lo);
    logpoly->add_option("--n-hi", n_hi);
    logpoly->add_option("--box", box, "also run the abundance scan on this square box");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(opts, family, upto, out_file);
        if (scan->parsed()) return cmd_scan(opts, family, box, mode);
        if (threshold->parsed()) return cmd_threshold(opts, family, horizon, mode);
        if (condition->parsed()) return cmd_condition(opts, family, N, k, M, mode);
        if (bounds->parsed()) return cmd_bounds(opts, family, N, n, m, mode);
        if (verify->parsed()) return cmd_verify(opts, table, box, mary_m, with_k3, allow_long_run);
        if (example->parsed()) return cmd_example(opts, kind, upto);
        if (logpoly->parsed()) return cmd_logpoly(opts, r_text, s_text, t_text, n_lo, n_hi, box);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
