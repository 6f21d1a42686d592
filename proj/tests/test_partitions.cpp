#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enumeration.hpp"
#include "partlog/sequence.hpp"

using namespace partlog;

namespace {

PartitionFamily fam(const std::string& text) { return PartitionFamily::parse(text); }

}  // namespace

TEST_CASE("family canonical strings round-trip") {
    for (const char* text : {"p", "distinct", "overpartition", "power2", "power3", "mary2",
                             "mary7", "frac:-1", "frac:1/2", "frac:-5/3", "multiset:1,2,2,5"}) {
        CHECK(fam(text).canonical() == text);
    }
    CHECK(fam("unrestricted").canonical() == "p");
    CHECK_THROWS_AS(fam("power0"), std::invalid_argument);
    CHECK_THROWS_AS(fam("mary1"), std::invalid_argument);
    CHECK_THROWS_AS(fam("multiset:"), std::invalid_argument);
    CHECK_THROWS_AS(fam("multiset:3,2"), std::invalid_argument);
    CHECK_THROWS_AS(fam("multiset:0,2"), std::invalid_argument);
    CHECK_THROWS_AS(fam("nope"), std::invalid_argument);
}

TEST_CASE("generate: pinned values") {
    const ExactSequence p = generate(fam("p"), 30);
    CHECK(p.at(0) == Rational(1));
    CHECK(p.at(4) == Rational(5));
    CHECK(p.at(25) == Rational(1958));
    CHECK(p.at(26) == Rational(2436));

    CHECK(generate(fam("overpartition"), 4).at(4) == Rational(14));

    const ExactSequence pd = generate(fam("distinct"), 33);
    CHECK(pd.at(32) == Rational(390));
    CHECK(pd.at(33) == Rational(448));

    CHECK(generate(fam("power2"), 4).at(4) == Rational(2));
    CHECK(generate(fam("mary2"), 4).at(4) == Rational(4));
    CHECK(generate(fam("mary3"), 4).at(4) == Rational(2));
    CHECK(generate(fam("mary5"), 4).at(4) == Rational(1));
    CHECK(generate(fam("multiset:1,2"), 4).at(4) == Rational(3));
}

TEST_CASE("oracle_generate: pinned values") {
    const ExactSequence p = oracle_generate(fam("p"), 26);
    CHECK(p.at(25) == Rational(1958));
    CHECK(p.at(26) == Rational(2436));
    CHECK(oracle_generate(fam("distinct"), 8).at(8) == Rational(6));
    CHECK(oracle_generate(fam("mary4"), 4).at(4) == Rational(2));
}

TEST_CASE("oracle certified by exhaustive enumeration") {
    using partlog_test::all_parts;
    using partlog_test::count_overpartitions;
    using partlog_test::count_partitions;
    const ExactSequence p = oracle_generate(fam("p"), 22);
    const ExactSequence pd = oracle_generate(fam("distinct"), 22);
    const ExactSequence ov = oracle_generate(fam("overpartition"), 14);
    const ExactSequence p2 = oracle_generate(fam("power2"), 22);
    const ExactSequence m12 = oracle_generate(fam("multiset:1,2"), 22);
    const ExactSequence m122 = oracle_generate(fam("multiset:1,2,2"), 18);
    for (unsigned long n = 0; n <= 22; ++n) {
        CHECK(p.at(n).num() == count_partitions(n, all_parts(n)));
        CHECK(pd.at(n).num() == count_partitions(n, all_parts(n), true));
        CHECK(p2.at(n).num() == count_partitions(n, {1, 4, 9, 16}));
        CHECK(m12.at(n).num() == count_partitions(n, {1, 2}));
        if (n <= 18) CHECK(m122.at(n).num() == count_partitions(n, {1, 2, 2}) + 0);
        if (n <= 14) CHECK(ov.at(n).num() == count_overpartitions(n));
    }
    // repeated multiset entries are distinct part types: 1/(1-q^2)^2 vs 1/(1-q^2)
    CHECK(m122.at(4) != m12.at(4));
}

TEST_CASE("generate == oracle_generate across families") {
    const std::size_t upto = 120;
    for (const char* text : {"p", "distinct", "overpartition", "power2", "power3", "mary2",
                             "mary3", "frac:-1", "frac:1", "frac:-2", "multiset:1,2,2,5"}) {
        const auto family = fam(text);
        const ExactSequence a = generate(family, upto);
        const ExactSequence b = oracle_generate(family, upto);
        for (std::size_t n = 0; n <= upto; ++n) {
            INFO(text, " at ", n);
            CHECK(a.at(n) == b.at(n));
        }
    }
    // non-integer alpha: binomial-series oracle, small window
    for (const char* text : {"frac:1/2", "frac:-3/2", "frac:2/3"}) {
        const auto family = fam(text);
        const ExactSequence a = generate(family, 48);
        const ExactSequence b = oracle_generate(family, 48);
        for (std::size_t n = 0; n <= 48; ++n) {
            INFO(text, " at ", n);
            CHECK(a.at(n) == b.at(n));
        }
    }
}

TEST_CASE("fractional alpha = -1 matches p; alpha = +1 is the pentagonal support") {
    const std::size_t upto = 200;
    const ExactSequence fm1 = generate(fam("frac:-1"), upto);
    const ExactSequence p = generate(fam("p"), upto);
    for (std::size_t n = 0; n <= upto; ++n) CHECK(fm1.at(n) == p.at(n));

    const ExactSequence fp1 = generate(fam("frac:1"), upto);
    std::vector<bool> pentagonal(upto + 1, false);
    for (long j = 1;; ++j) {
        const long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
        if (static_cast<std::size_t>(g1) > upto) break;
        pentagonal[g1] = true;
        if (static_cast<std::size_t>(g2) <= upto) pentagonal[g2] = true;
    }
    for (std::size_t n = 1; n <= upto; ++n) {
        if (pentagonal[n])
            CHECK((fp1.at(n) == Rational(1) || fp1.at(n) == Rational(-1)));
        else
            CHECK(fp1.at(n).is_zero());
    }
}

TEST_CASE("fractional alpha = -k is the k-fold convolution of p") {
    const std::size_t upto = 80;
    const ExactSequence p = generate(fam("p"), upto);
    const ExactSequence f2 = generate(fam("frac:-2"), upto);
    const ExactSequence f3 = generate(fam("frac:-3"), upto);
    std::vector<Rational> conv2(upto + 1), conv3(upto + 1);
    for (std::size_t n = 0; n <= upto; ++n)
        for (std::size_t k = 0; k <= n; ++k) conv2[n] += p.at(k) * p.at(n - k);
    for (std::size_t n = 0; n <= upto; ++n)
        for (std::size_t k = 0; k <= n; ++k) conv3[n] += conv2[k] * p.at(n - k);
    for (std::size_t n = 0; n <= upto; ++n) {
        CHECK(f2.at(n) == conv2[n]);
        CHECK(f3.at(n) == conv3[n]);
    }
}

TEST_CASE("fractional self-consistency: frac:1/2 squared is frac:1") {
    const std::size_t upto = 60;
    const ExactSequence h = generate(fam("frac:1/2"), upto);
    const ExactSequence e = generate(fam("frac:1"), upto);
    for (std::size_t n = 0; n <= upto; ++n) {
        Rational conv;
        for (std::size_t k = 0; k <= n; ++k) conv += h.at(k) * h.at(n - k);
        CHECK(conv == e.at(n));
    }
}

TEST_CASE("Euler identity: distinct parts match odd-parts counting") {
    const std::size_t upto = 500;
    const ExactSequence pd = generate(fam("distinct"), upto);
    std::string odd = "multiset:";
    for (std::size_t j = 1; j <= upto; j += 2) {
        if (j > 1) odd += ',';
        odd += std::to_string(j);
    }
    const ExactSequence podd = generate(fam(odd), upto);
    for (std::size_t n = 0; n <= upto; ++n) CHECK(pd.at(n) == podd.at(n));
}

TEST_CASE("monotonicity of the counting families") {
    const std::size_t upto = 400;
    const ExactSequence p = generate(fam("p"), upto);
    const ExactSequence ov = generate(fam("overpartition"), upto);
    const ExactSequence pd = generate(fam("distinct"), upto);
    for (std::size_t n = 1; n < upto; ++n) {
        CHECK(p.at(n + 1) > p.at(n));
        CHECK(ov.at(n + 1) > ov.at(n));
        CHECK(pd.at(n + 1) >= pd.at(n));
    }
}

TEST_CASE("index 0 is 1 and integer families are nonnegative integers") {
    for (const char* text : {"p", "distinct", "overpartition", "power3", "mary4",
                             "multiset:2,3", "frac:1/2"}) {
        const ExactSequence s = generate(fam(text), 40);
        CHECK(s.at(0) == Rational(1));
        if (fam(text).integer_valued())
            for (std::size_t n = 0; n <= 40; ++n) {
                CHECK(s.at(n).is_integer());
                CHECK(s.at(n).sign() >= 0);
            }
    }
}

TEST_CASE("power parts k=1 agrees with the pentagonal recurrence") {
    const ExactSequence p = generate(fam("p"), 150);
    const ExactSequence p1 = generate(fam("power1"), 150);
    for (std::size_t n = 0; n <= 150; ++n) CHECK(p.at(n) == p1.at(n));
}

TEST_CASE("generator extension never changes produced values") {
    for (const char* text : {"p", "distinct", "overpartition", "power2", "mary3", "frac:-1/2"}) {
        SequenceGenerator gen(fam(text));
        gen.extend_to(40);
        const ExactSequence first = gen.snapshot(40);
        gen.extend_to(90);
        const ExactSequence second = gen.snapshot(90);
        const ExactSequence fresh = generate(fam(text), 90);
        for (std::size_t n = 0; n <= 40; ++n) CHECK(first.at(n) == second.at(n));
        for (std::size_t n = 0; n <= 90; ++n) CHECK(second.at(n) == fresh.at(n));
    }
}

TEST_CASE("sequence accessors") {
    const ExactSequence s = make_sequence("fixture", {Rational(1), Rational(2)}, 5);
    CHECK(s.start_index() == 5);
    CHECK(s.max_index() == 6);
    CHECK(s.covers(5));
    CHECK(!s.covers(7));
    CHECK(s.at(6) == Rational(2));
    CHECK_THROWS_AS(s.at(4), std::out_of_range);
    CHECK_THROWS_AS(make_sequence("empty", {}), std::invalid_argument);
    CHECK_THROWS_AS(reciprocal(make_sequence("zero", {Rational(0)})), std::domain_error);
}
