#pragma once

// Rankings induced by strength vectors, set comparison between argument sets
// and a checker for the ranking properties the counting semantics satisfies.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "argcount/counting.hpp"
#include "argcount/framework.hpp"

namespace argcount {

enum class Order { greater, equivalent, less };

inline char symbol(Order o) {
    switch (o) {
    case Order::greater: return '>';
    case Order::equivalent: return '=';
    case Order::less: return '<';
    }
    return '?';
}

/**
 * Total preorder x >= y iff v(x) >= v(y).
 *
 * Strengths are compared after rounding to `decimals` places, which turns
 * "equal up to float noise" into a transitive equivalence.
 */
class Ranking {
public:
    static constexpr int default_decimals = 9;

    explicit Ranking(StrengthVector strengths, int decimals = default_decimals)
        : strengths_(std::move(strengths)) {
        const double scale = std::pow(10.0, decimals);
        keys_.reserve(strengths_.size());
        for (double v : strengths_.values) {
            if (!std::isfinite(v))
                throw Error("cannot rank non-finite strength");
            keys_.push_back(std::llround(v * scale));
        }
    }

    std::size_t size() const noexcept { return keys_.size(); }
    const StrengthVector& strengths() const noexcept { return strengths_; }
    const std::vector<std::int64_t>& quantized() const noexcept { return keys_; }

    Order compare(ArgIndex x, ArgIndex y) const {
        const auto kx = keys_.at(x), ky = keys_.at(y);
        if (kx > ky)
            return Order::greater;
        if (kx < ky)
            return Order::less;
        return Order::equivalent;
    }

    bool at_least(ArgIndex x, ArgIndex y) const { return compare(x, y) != Order::less; }
    bool strictly(ArgIndex x, ArgIndex y) const { return compare(x, y) == Order::greater; }

    /// Equivalence classes, strongest first; members ascending by index.
    std::vector<std::vector<ArgIndex>> classes() const {
        std::map<std::int64_t, std::vector<ArgIndex>, std::greater<>> grouped;
        for (ArgIndex i = 0; i < keys_.size(); ++i)
            grouped[keys_[i]].push_back(i);
        std::vector<std::vector<ArgIndex>> out;
        for (auto& [key, members] : grouped)
            out.push_back(std::move(members));
        return out;
    }

private:
    StrengthVector strengths_;
    std::vector<std::int64_t> keys_;
};

inline Ranking rank(const StrengthVector& strengths) { return Ranking(strengths); }

inline Order compare(const Ranking& r, ArgIndex x, ArgIndex y) { return r.compare(x, y); }

namespace detail {

// Kuhn's augmenting-path matching of `left` into `right` over edges allowed by
// `edge(x, y)`. Returns the matching size.
template <class Edge>
std::size_t max_matching(const ArgSet& left, const ArgSet& right, Edge edge) {
    std::vector<std::optional<std::size_t>> owner(right.size());
    std::vector<bool> seen;
    auto augment = [&](auto&& self, std::size_t l) -> bool {
        for (std::size_t r = 0; r < right.size(); ++r) {
            if (seen[r] || !edge(left[l], right[r]))
                continue;
            seen[r] = true;
            if (!owner[r] || self(self, *owner[r])) {
                owner[r] = l;
                return true;
            }
        }
        return false;
    };
    std::size_t matched = 0;
    for (std::size_t l = 0; l < left.size(); ++l) {
        seen.assign(right.size(), false);
        if (augment(augment, l))
            ++matched;
    }
    return matched;
}

inline ArgSet without(const ArgSet& s, ArgIndex x) {
    ArgSet out;
    for (auto y : s)
        if (y != x)
            out.push_back(y);
    return out;
}

} // namespace detail

/// S1 ⊑ S2: some injective map l: S1 -> S2 has l(x) >= x for every x in S1.
inline bool set_leq(const Ranking& r, const ArgSet& s1, const ArgSet& s2) {
    if (s1.size() > s2.size())
        return false;
    auto edge = [&](ArgIndex x, ArgIndex y) { return r.at_least(y, x); };
    return detail::max_matching(s1, s2, edge) == s1.size();
}

/**
 * S1 ⊏ S2: one injective map witnesses S1 ⊑ S2 and, in addition, either
 * |S1| < |S2| or l(x) > x for some x.
 *
 * With equal sizes, each strict pair (x, y) is forced into the map in turn
 * and the rest re-matched.
 */
inline bool set_lt(const Ranking& r, const ArgSet& s1, const ArgSet& s2) {
    if (!set_leq(r, s1, s2))
        return false;
    if (s1.size() < s2.size())
        return true;
    for (auto x : s1)
        for (auto y : s2)
            if (r.strictly(y, x) && set_leq(r, detail::without(s1, x), detail::without(s2, y)))
                return true;
    return false;
}

enum class PropertyStatus { pass, fail, not_applicable };

inline const char* to_string(PropertyStatus s) {
    switch (s) {
    case PropertyStatus::pass: return "PASS";
    case PropertyStatus::fail: return "FAIL";
    case PropertyStatus::not_applicable: return "N/A";
    }
    return "?";
}

struct Witness {
    ArgIndex x;
    ArgIndex y;
    std::string violation;
};

struct PropertyResult {
    std::string name;
    PropertyStatus status = PropertyStatus::pass;
    std::vector<Witness> witnesses;
};

struct PropertyReport {
    std::vector<PropertyResult> properties;
    /// Pairs whose strengths differ by less than 10 epsilon, where the
    /// approximation could in principle flip the order.
    std::vector<std::pair<ArgIndex, ArgIndex>> near_ties;

    bool passed() const {
        return std::none_of(properties.begin(), properties.end(),
                            [](const PropertyResult& p) { return p.status == PropertyStatus::fail; });
    }

    const PropertyResult* find(const std::string& name) const {
        for (const auto& p : properties)
            if (p.name == name)
                return &p;
        return nullptr;
    }
};

struct CheckOptions {
    /// Parameters the strengths were computed with. Needed for the
    /// isomorphism check (which recomputes) and for near-tie flagging.
    std::optional<CountingParams> params;
    /// Re-indexing applied for the isomorphism check; reversed order if empty.
    std::vector<ArgIndex> permutation;
    double isomorphism_tolerance = 1e-12;
};

/// True iff the attack graph is a single elementary cycle through all
/// arguments (a lone self-attacker counts).
inline bool is_elementary_cycle(const Framework& af) {
    if (af.empty())
        return false;
    for (ArgIndex i = 0; i < af.size(); ++i)
        if (af.attackers_of(i).size() != 1 || af.attacked_by(i).size() != 1)
            return false;
    ArgIndex at = 0;
    for (std::size_t step = 1; step < af.size(); ++step) {
        at = af.attacked_by(at).front();
        if (at == 0)
            return false;
    }
    return af.attacked_by(at).front() == 0;
}

namespace detail {

inline std::string describe(const Framework& af, const Ranking& r, ArgIndex x, ArgIndex y,
                            const char* expected) {
    std::ostringstream os;
    os.precision(17);
    os << "expected " << af.name(x) << ' ' << expected << ' ' << af.name(y) << " but v("
       << af.name(x) << ")=" << r.strengths()[x] << ' ' << symbol(r.compare(x, y)) << " v("
       << af.name(y) << ")=" << r.strengths()[y];
    return os.str();
}

inline bool is_strict_subset(const ArgSet& a, const ArgSet& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace detail

/**
 * Checks, over every ordered pair of distinct arguments, the implications
 *
 *   P1        R-(x) = {} and R-(y) != {}   =>  x > y
 *   P2        R-(x) = R-(y)                =>  x ~ y
 *   P3        R-(x) strict subset of R-(y) =>  x > y
 *   Theorem4  R-(x) ⊑ R-(y)                =>  x >= y
 *   Theorem5  R-(x) ⊏ R-(y)                =>  x > y
 *
 * plus equal strengths on elementary cycles (Corollary1) and, when params
 * are given, invariance under re-indexing and renaming (Theorem3).
 */
inline PropertyReport check_properties(const Framework& af, const StrengthVector& strengths,
                                       const CheckOptions& options = {}) {
    if (strengths.size() != af.size())
        throw Error("strength vector does not match framework size");
    const Ranking r(strengths);
    const std::size_t n = af.size();

    auto named = [](const char* name) { return PropertyResult{name, PropertyStatus::pass, {}}; };
    PropertyResult p1 = named("P1"), p2 = named("P2"), p3 = named("P3"), t4 = named("Theorem4"),
                   t5 = named("Theorem5");
    auto fail = [&](PropertyResult& p, ArgIndex x, ArgIndex y, const char* expected) {
        p.status = PropertyStatus::fail;
        p.witnesses.push_back({x, y, detail::describe(af, r, x, y, expected)});
    };

    for (ArgIndex x = 0; x < n; ++x) {
        for (ArgIndex y = 0; y < n; ++y) {
            if (x == y)
                continue;
            const auto& ax = af.attackers_of(x);
            const auto& ay = af.attackers_of(y);
            if (ax.empty() && !ay.empty() && !r.strictly(x, y))
                fail(p1, x, y, ">");
            if (ax == ay && r.compare(x, y) != Order::equivalent)
                fail(p2, x, y, "=");
            if (detail::is_strict_subset(ax, ay) && !r.strictly(x, y))
                fail(p3, x, y, ">");
            if (set_leq(r, ax, ay) && !r.at_least(x, y))
                fail(t4, x, y, ">=");
            if (set_lt(r, ax, ay) && !r.strictly(x, y))
                fail(t5, x, y, ">");
        }
    }

    PropertyResult c1 = named("Corollary1");
    if (!is_elementary_cycle(af)) {
        c1.status = PropertyStatus::not_applicable;
    } else {
        for (ArgIndex y = 1; y < n; ++y)
            if (strengths[y] != strengths[0])
                fail(c1, 0, y, "=");
    }

    PropertyResult t3 = named("Theorem3");
    if (!options.params) {
        t3.status = PropertyStatus::not_applicable;
    } else {
        std::vector<ArgIndex> order = options.permutation;
        if (order.empty())
            for (ArgIndex i = n; i-- > 0;)
                order.push_back(i);
        // tau renames x to "x'" and moves it to the position given by `order`
        std::map<std::string, std::string> tau;
        for (const auto& name : af.names())
            tau[name] = name + "'";
        const Framework image = reorder(apply_isomorphism(af, tau), order);
        const StrengthVector mapped = iterate(image, *options.params).strengths;
        const Ranking mapped_rank(mapped);
        std::vector<ArgIndex> where(n);
        for (std::size_t k = 0; k < n; ++k)
            where[order[k]] = k;
        for (ArgIndex x = 0; x < n; ++x) {
            if (std::abs(strengths[x] - mapped[where[x]]) > options.isomorphism_tolerance) {
                std::ostringstream os;
                os.precision(17);
                os << "v(" << af.name(x) << ")=" << strengths[x] << " but v(" << image.name(where[x])
                   << ")=" << mapped[where[x]];
                t3.status = PropertyStatus::fail;
                t3.witnesses.push_back({x, x, os.str()});
            }
            for (ArgIndex y = 0; y < n; ++y) {
                if (r.compare(x, y) != mapped_rank.compare(where[x], where[y])) {
                    t3.status = PropertyStatus::fail;
                    t3.witnesses.push_back(
                        {x, y, "ranking of " + af.name(x) + " vs " + af.name(y) +
                                   " changes under isomorphism"});
                }
            }
        }
    }

    PropertyReport report;
    report.properties = {p1, p2, p3, t4, t5, c1, t3};
    if (options.params) {
        const double band = 10.0 * options.params->epsilon;
        for (ArgIndex x = 0; x < n; ++x)
            for (ArgIndex y = x + 1; y < n; ++y) {
                const double gap = std::abs(strengths[x] - strengths[y]);
                if (gap > 0.0 && gap < band)
                    report.near_ties.emplace_back(x, y);
            }
    }
    return report;
}

} // namespace argcount
