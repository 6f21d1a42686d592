#pragma once

#include "partlog/family.hpp"
#include "partlog/rational.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace partlog {

inline constexpr const char* kGeneratorVersion = "1";

/**
 * A contiguous run of exact values [start_index, start_index + size) for one
 * sequence. Immutable once built; safe to share across threads. `label` is
 * the canonical family string for generated runs, or a descriptive tag for
 * synthetic sequences (examples, reciprocals, test fixtures).
 */
class ExactSequence {
public:
    ExactSequence(std::string label, std::size_t start_index,
                  std::vector<Rational> values,
                  std::string generator_version = kGeneratorVersion);

    const std::string& label() const { return label_; }
    std::size_t start_index() const { return start_; }
    std::size_t size() const { return values_.size(); }
    std::size_t max_index() const { return start_ + values_.size() - 1; }
    bool covers(std::size_t n) const { return n >= start_ && n <= max_index(); }

    // Absolute index; throws std::out_of_range outside the run.
    const Rational& at(std::size_t n) const;

    std::span<const Rational> values() const { return values_; }
    const std::string& generator_version() const { return version_; }

private:
    std::string label_;
    std::size_t start_;
    std::vector<Rational> values_;
    std::string version_;
};

/**
 * Incremental generator: owns whatever recurrence state a family needs and
 * grows the value run on demand. Already-produced values never change.
 * Unrestricted (pentagonal recurrence) and Fractional (sigma-convolution)
 * extend from their state; the product-DP families regenerate, which costs
 * the same O(#parts * upto) as the extension itself.
 */
class SequenceGenerator {
public:
    explicit SequenceGenerator(PartitionFamily family);
    ~SequenceGenerator();
    SequenceGenerator(SequenceGenerator&&) noexcept;
    SequenceGenerator& operator=(SequenceGenerator&&) noexcept;

    const PartitionFamily& family() const;
    void extend_to(std::size_t upto);       // ensure values for 0..upto
    std::size_t max_index() const;
    const Rational& value(std::size_t n);   // extends if needed
    ExactSequence snapshot(std::size_t upto);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// values[n] = coefficient of q^n in the family's generating function,
/// 0 <= n <= upto.
ExactSequence generate(const PartitionFamily& family, std::size_t upto);

/// Same contract as generate(), computed by naive truncated series products
/// (binomial series for non-integer Fractional alpha). Independent of the
/// recurrences in generate(); intended for certification. Practical up to a
/// few thousand terms (a few dozen for non-integer alpha).
ExactSequence oracle_generate(const PartitionFamily& family, std::size_t upto);

ExactSequence make_sequence(std::string label, std::vector<Rational> values,
                            std::size_t start_index = 0);

/// Element-wise reciprocal; throws std::domain_error on a zero value.
ExactSequence reciprocal(const ExactSequence& seq);

}  // namespace partlog
