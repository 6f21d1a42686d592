#include "partlog/sequence.hpp"

#include <stdexcept>
#include <utility>
#include <variant>

namespace partlog {

ExactSequence::ExactSequence(std::string label, std::size_t start_index,
                             std::vector<Rational> values, std::string generator_version)
    : label_(std::move(label)),
      start_(start_index),
      values_(std::move(values)),
      version_(std::move(generator_version)) {
    if (values_.empty()) throw std::invalid_argument("ExactSequence: empty value run");
}

const Rational& ExactSequence::at(std::size_t n) const {
    if (!covers(n))
        throw std::out_of_range("ExactSequence '" + label_ + "': index " + std::to_string(n) +
                                " outside [" + std::to_string(start_) + ", " +
                                std::to_string(max_index()) + "]");
    return values_[n - start_];
}

ExactSequence make_sequence(std::string label, std::vector<Rational> values, std::size_t start_index) {
    return ExactSequence(std::move(label), start_index, std::move(values), "synthetic");
}

ExactSequence reciprocal(const ExactSequence& seq) {
    std::vector<Rational> values;
    values.reserve(seq.size());
    for (const Rational& v : seq.values()) values.push_back(v.reciprocal());
    return ExactSequence("reciprocal(" + seq.label() + ")", seq.start_index(),
                         std::move(values), seq.generator_version());
}

namespace {

std::vector<unsigned long> power_part_list(unsigned k, std::size_t upto) {
    std::vector<unsigned long> parts;
    for (unsigned long j = 1;; ++j) {
        mpz_class a;
        mpz_ui_pow_ui(a.get_mpz_t(), j, k);
        if (!a.fits_ulong_p() || a.get_ui() > upto) break;
        parts.push_back(a.get_ui());
    }
    return parts;
}

std::vector<unsigned long> mary_part_list(unsigned m, std::size_t upto) {
    std::vector<unsigned long> parts;
    for (unsigned long v = 1; v <= upto; ) {
        parts.push_back(v);
        if (v > upto / m) break;
        v *= m;
    }
    return parts;
}

std::vector<unsigned long> multiset_part_list(const Multiset& ms, std::size_t upto) {
    std::vector<unsigned long> parts;
    for (unsigned long a : ms.parts)
        if (a <= upto) parts.push_back(a);
    return parts;
}

// Unbounded-coin DP, outer loop over parts, inner ascending over n.
std::vector<Rational> coin_dp(const std::vector<unsigned long>& parts, std::size_t upto) {
    std::vector<Rational> c(upto + 1, Rational(0));
    c[0] = Rational(1);
    for (unsigned long a : parts)
        for (std::size_t n = a; n <= upto; ++n) c[n] += c[n - a];
    return c;
}

// prod (1+q^j): 0/1 item per part, descending inner loop.
std::vector<Rational> distinct_dp(std::size_t upto) {
    std::vector<Rational> c(upto + 1, Rational(0));
    c[0] = Rational(1);
    for (std::size_t j = 1; j <= upto; ++j)
        for (std::size_t n = upto; n >= j; --n) {
            c[n] += c[n - j];
            if (n == j) break;
        }
    return c;
}

// prod (1+q^j)/(1-q^j). Per part j the factor is 1 + 2q^j + 2q^{2j} + ...,
// applied with a stride-j running sum.
std::vector<Rational> overpartition_dp(std::size_t upto) {
    std::vector<Rational> c(upto + 1, Rational(0));
    c[0] = Rational(1);
    std::vector<Rational> tail(upto + 1);
    for (std::size_t j = 1; j <= upto; ++j) {
        for (std::size_t n = 0; n <= upto; ++n) {
            tail[n] = c[n];
            if (n >= j) tail[n] += tail[n - j];
        }
        for (std::size_t n = j; n <= upto; ++n) c[n] += tail[n - j] + tail[n - j];
    }
    return c;
}

void extend_pentagonal(std::vector<Rational>& v, std::size_t upto) {
    if (v.empty()) v.push_back(Rational(1));
    for (std::size_t n = v.size(); n <= upto; ++n) {
        Rational s;
        for (unsigned long j = 1;; ++j) {
            const unsigned long g1 = j * (3 * j - 1) / 2;
            if (g1 > n) break;
            const unsigned long g2 = g1 + j;
            if (j % 2 == 1) {
                s += v[n - g1];
                if (g2 <= n) s += v[n - g2];
            } else {
                s -= v[n - g1];
                if (g2 <= n) s -= v[n - g2];
            }
        }
        v.push_back(std::move(s));
    }
}

}  // namespace

struct SequenceGenerator::Impl {
    PartitionFamily family;
    std::vector<Rational> values;
    std::vector<Rational> sigma;  // Fractional only: sigma[k] = sigma_1(k), sigma[0] unused

    explicit Impl(PartitionFamily f) : family(std::move(f)) {}

    void extend_sigma(std::size_t upto) {
        if (sigma.empty()) sigma.push_back(Rational(0));
        for (std::size_t n = sigma.size(); n <= upto; ++n) {
            unsigned long s = 0;
            for (unsigned long d = 1; d * d <= n; ++d) {
                if (n % d != 0) continue;
                s += d;
                if (d != n / d) s += n / d;
            }
            sigma.push_back(Rational(s));
        }
    }

    // n c_n = alpha * sum_{k=1}^{n} (-sigma_1(k)) c_{n-k}, c_0 = 1.
    void extend_fractional(const Rational& alpha, std::size_t upto) {
        extend_sigma(upto);
        if (values.empty()) values.push_back(Rational(1));
        for (std::size_t n = values.size(); n <= upto; ++n) {
            Rational acc;
            for (std::size_t k = 1; k <= n; ++k) acc -= sigma[k] * values[n - k];
            values.push_back(alpha * acc / Rational(static_cast<unsigned long>(n)));
        }
    }

    void extend(std::size_t upto) {
        if (!values.empty() && upto < values.size()) return;
        struct Visitor {
            Impl& impl;
            std::size_t upto;
            void operator()(const Unrestricted&) { extend_pentagonal(impl.values, upto); }
            void operator()(const DistinctParts&) { impl.values = distinct_dp(upto); }
            void operator()(const Overpartition&) { impl.values = overpartition_dp(upto); }
            void operator()(const PowerParts& pp) { impl.values = coin_dp(power_part_list(pp.k, upto), upto); }
            void operator()(const MAry& ma) { impl.values = coin_dp(mary_part_list(ma.m, upto), upto); }
            void operator()(const Multiset& ms) { impl.values = coin_dp(multiset_part_list(ms, upto), upto); }
            void operator()(const Fractional& f) { impl.extend_fractional(f.alpha, upto); }
        };
        std::visit(Visitor{*this, upto}, family.kind());
    }
};

SequenceGenerator::SequenceGenerator(PartitionFamily family)
    : impl_(std::make_unique<Impl>(std::move(family))) {
    impl_->extend(0);
}

SequenceGenerator::~SequenceGenerator() = default;
SequenceGenerator::SequenceGenerator(SequenceGenerator&&) noexcept = default;
SequenceGenerator& SequenceGenerator::operator=(SequenceGenerator&&) noexcept = default;

const PartitionFamily& SequenceGenerator::family() const { return impl_->family; }

void SequenceGenerator::extend_to(std::size_t upto) { impl_->extend(upto); }

std::size_t SequenceGenerator::max_index() const { return impl_->values.size() - 1; }

const Rational& SequenceGenerator::value(std::size_t n) {
    impl_->extend(n);
    return impl_->values[n];
}

ExactSequence SequenceGenerator::snapshot(std::size_t upto) {
    impl_->extend(upto);
    std::vector<Rational> run(impl_->values.begin(), impl_->values.begin() + upto + 1);
    return ExactSequence(impl_->family.canonical(), 0, std::move(run));
}

ExactSequence generate(const PartitionFamily& family, std::size_t upto) {
    SequenceGenerator gen(family);
    return gen.snapshot(upto);
}

// ---------------------------------------------------------------------------
// Oracle: naive truncated series products. Kept deliberately independent of
// the recurrences above.

namespace {

using Series = std::vector<Rational>;

Series mul_truncated(const Series& a, const Series& b, std::size_t upto) {
    Series out(upto + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= upto; ++i) {
        if (a[i].is_zero()) continue;
        const std::size_t jmax = std::min(upto - i, b.size() - 1);
        for (std::size_t j = 0; j <= jmax; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Series one_plus_qj(unsigned long j, std::size_t upto) {
    Series f(std::min<std::size_t>(j, upto) + 1, Rational(0));
    f[0] = Rational(1);
    if (j <= upto) f[j] = Rational(1);
    return f;
}

Series geometric(unsigned long j, std::size_t upto) {
    Series f(upto + 1, Rational(0));
    for (std::size_t n = 0; n <= upto; n += j) f[n] = Rational(1);
    return f;
}

Series product_over(const std::vector<Series>& factors, std::size_t upto) {
    Series acc(1, Rational(1));
    for (const Series& f : factors) acc = mul_truncated(acc, f, upto);
    return acc;
}

Series euler_product(std::size_t upto) {  // prod (1 - q^j)
    Series acc(1, Rational(1));
    for (std::size_t j = 1; j <= upto; ++j) {
        Series f(j + 1, Rational(0));
        f[0] = Rational(1);
        f[j] = Rational(-1);
        acc = mul_truncated(acc, f, upto);
    }
    return acc;
}

Series series_reciprocal(const Series& e, std::size_t upto) {
    if (e.empty() || !e[0].is_one())
        throw std::domain_error("oracle: reciprocal needs constant term 1");
    Series r(upto + 1, Rational(0));
    r[0] = Rational(1);
    for (std::size_t n = 1; n <= upto; ++n) {
        Rational acc;
        const std::size_t kmax = std::min(n, e.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) acc += e[k] * r[n - k];
        r[n] = -acc;
    }
    return r;
}

// E^alpha for rational alpha via the binomial series on (E - 1), which has
// valuation >= 1 so the sum truncates at i = upto.
Series binomial_power(const Series& e, const Rational& alpha, std::size_t upto) {
    Series base(e.begin(), e.begin() + std::min<std::size_t>(e.size(), upto + 1));
    base.resize(upto + 1, Rational(0));
    base[0] -= Rational(1);
    Series result(upto + 1, Rational(0));
    Series power(1, Rational(1));
    Rational coeff(1);
    for (std::size_t i = 0; i <= upto; ++i) {
        if (i > 0) {
            coeff *= (alpha - Rational(static_cast<unsigned long>(i - 1))) /
                     Rational(static_cast<unsigned long>(i));
            power = mul_truncated(power, base, upto);
        }
        if (coeff.is_zero()) break;
        for (std::size_t n = 0; n < power.size(); ++n)
            if (!power[n].is_zero()) result[n] += coeff * power[n];
    }
    return result;
}

Series oracle_series(const PartitionFamily& family, std::size_t upto) {
    struct Visitor {
        std::size_t upto;
        Series operator()(const Unrestricted&) const {
            std::vector<Series> fs;
            for (std::size_t j = 1; j <= upto; ++j) fs.push_back(geometric(j, upto));
            return product_over(fs, upto);
        }
        Series operator()(const DistinctParts&) const {
            std::vector<Series> fs;
            for (std::size_t j = 1; j <= upto; ++j) fs.push_back(one_plus_qj(j, upto));
            return product_over(fs, upto);
        }
        Series operator()(const Overpartition&) const {
            std::vector<Series> fs;
            for (std::size_t j = 1; j <= upto; ++j) {
                fs.push_back(one_plus_qj(j, upto));
                fs.push_back(geometric(j, upto));
            }
            return product_over(fs, upto);
        }
        Series from_parts(const std::vector<unsigned long>& parts) const {
            std::vector<Series> fs;
            for (unsigned long a : parts) fs.push_back(geometric(a, upto));
            return product_over(fs, upto);
        }
        Series operator()(const PowerParts& pp) const { return from_parts(power_part_list(pp.k, upto)); }
        Series operator()(const MAry& ma) const { return from_parts(mary_part_list(ma.m, upto)); }
        Series operator()(const Multiset& ms) const { return from_parts(multiset_part_list(ms, upto)); }
        Series operator()(const Fractional& f) const {
            const Series e = euler_product(upto);
            if (!f.alpha.is_integer()) return binomial_power(e, f.alpha, upto);
            mpz_class a = f.alpha.num();
            Series acc(1, Rational(1));
            const Series base = a < 0 ? series_reciprocal(e, upto) : e;
            for (mpz_class i = 0; i < ::abs(a); ++i) acc = mul_truncated(acc, base, upto);
            return acc;
        }
    };
    return std::visit(Visitor{upto}, family.kind());
}

}  // namespace

ExactSequence oracle_generate(const PartitionFamily& family, std::size_t upto) {
    Series s = oracle_series(family, upto);
    s.resize(upto + 1, Rational(0));
    return ExactSequence(family.canonical(), 0, std::move(s), "oracle-1");
}

}  // namespace partlog
