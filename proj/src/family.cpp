#include "partlog/family.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace partlog {

namespace {

unsigned parse_unsigned(std::string_view text, std::string_view what) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("family: bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

}  // namespace

PartitionFamily::PartitionFamily(Kind kind) : kind_(std::move(kind)) {
    if (const auto* pp = std::get_if<PowerParts>(&kind_)) {
        if (pp->k < 1) throw std::invalid_argument("family: PowerParts needs k >= 1");
    } else if (const auto* ma = std::get_if<MAry>(&kind_)) {
        if (ma->m < 2) throw std::invalid_argument("family: MAry needs m >= 2");
    } else if (const auto* ms = std::get_if<Multiset>(&kind_)) {
        if (ms->parts.empty()) throw std::invalid_argument("family: Multiset needs parts");
        if (!std::is_sorted(ms->parts.begin(), ms->parts.end()))
            throw std::invalid_argument("family: Multiset parts must be non-decreasing");
        if (ms->parts.front() == 0)
            throw std::invalid_argument("family: Multiset parts must be positive");
    }
}

PartitionFamily PartitionFamily::parse(const std::string& text) {
    if (text == "p" || text == "unrestricted") return PartitionFamily(Unrestricted{});
    if (text == "distinct") return PartitionFamily(DistinctParts{});
    if (text == "overpartition") return PartitionFamily(Overpartition{});
    if (text.starts_with("power"))
        return PartitionFamily(PowerParts{parse_unsigned(std::string_view(text).substr(5), "k")});
    if (text.starts_with("mary"))
        return PartitionFamily(MAry{parse_unsigned(std::string_view(text).substr(4), "m")});
    if (text.starts_with("frac:"))
        return PartitionFamily(Fractional{Rational::from_string(text.substr(5))});
    if (text.starts_with("multiset:")) {
        Multiset ms;
        std::string_view rest = std::string_view(text).substr(9);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const auto item = rest.substr(0, comma);
            ms.parts.push_back(parse_unsigned(item, "multiset part"));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        return PartitionFamily(std::move(ms));
    }
    throw std::invalid_argument("family: unknown family '" + text + "'");
}

std::string PartitionFamily::canonical() const {
    struct Visitor {
        std::string operator()(const Unrestricted&) const { return "p"; }
        std::string operator()(const DistinctParts&) const { return "distinct"; }
        std::string operator()(const Overpartition&) const { return "overpartition"; }
        std::string operator()(const PowerParts& pp) const { return "power" + std::to_string(pp.k); }
        std::string operator()(const MAry& ma) const { return "mary" + std::to_string(ma.m); }
        std::string operator()(const Fractional& f) const { return "frac:" + f.alpha.str(); }
        std::string operator()(const Multiset& ms) const {
            std::string out = "multiset:";
            for (std::size_t i = 0; i < ms.parts.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(ms.parts[i]);
            }
            return out;
        }
    };
    return std::visit(Visitor{}, kind_);
}

bool PartitionFamily::integer_valued() const {
    if (const auto* f = std::get_if<Fractional>(&kind_)) return f->alpha.is_integer();
    return true;
}

}  // namespace partlog
