#pragma once

#include "partlog/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace partlog {

// Restricted-partition generating-function families.
//
//   Unrestricted   prod 1/(1-q^j)
//   DistinctParts  prod (1+q^j)
//   Overpartition  prod (1+q^j)/(1-q^j)
//   PowerParts(k)  prod 1/(1-q^{j^k})
//   MAry(m)        prod 1/(1-q^{m^j})
//   Fractional(a)  prod (1-q^j)^a, rational a
//   Multiset(A)    prod_{a in A} 1/(1-q^a), repeats are distinct part types

struct Unrestricted {};
struct DistinctParts {};
struct Overpartition {};
struct PowerParts { unsigned k = 1; };
struct MAry { unsigned m = 2; };
struct Fractional { Rational alpha; };
struct Multiset { std::vector<unsigned long> parts; };

class PartitionFamily {
public:
    using Kind = std::variant<Unrestricted, DistinctParts, Overpartition,
                              PowerParts, MAry, Fractional, Multiset>;

    explicit PartitionFamily(Kind kind);  // validates parameters

    // Canonical forms: "p", "distinct", "overpartition", "power<k>",
    // "mary<m>", "frac:<num>[/<den>]", "multiset:<a1>,<a2>,...".
    // parse() round-trips canonical() exactly.
    static PartitionFamily parse(const std::string& text);
    std::string canonical() const;

    const Kind& kind() const { return kind_; }
    bool integer_valued() const;

    bool operator==(const PartitionFamily& o) const { return canonical() == o.canonical(); }

private:
    Kind kind_;
};

}  // namespace partlog
