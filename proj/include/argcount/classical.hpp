#pragma once

// Dung's extension-based semantics by exhaustive subset search. Meant as a
// baseline and test oracle for small frameworks, not as a competitive solver.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "argcount/framework.hpp"

namespace argcount {

enum class Semantics { admissible, complete, preferred, stable, grounded };

inline std::string_view to_string(Semantics s) {
    switch (s) {
    case Semantics::admissible: return "admissible";
    case Semantics::complete: return "complete";
    case Semantics::preferred: return "preferred";
    case Semantics::stable: return "stable";
    case Semantics::grounded: return "grounded";
    }
    return "?";
}

inline Semantics parse_semantics(std::string_view name) {
    for (auto s : {Semantics::admissible, Semantics::complete, Semantics::preferred,
                   Semantics::stable, Semantics::grounded}) {
        if (to_string(s) == name)
            return s;
    }
    throw Error("unknown semantics '" + std::string(name) + "'");
}

struct ExtensionSet {
    Semantics semantics;
    std::vector<ArgSet> extensions;
};

inline constexpr std::size_t default_enumeration_cap = 20;

namespace detail {

inline void check_members(const Framework& af, const ArgSet& s) {
    for (auto x : s)
        if (x >= af.size())
            throw UnknownArgument("#" + std::to_string(x));
}

inline std::vector<bool> membership(const Framework& af, const ArgSet& s) {
    check_members(af, s);
    std::vector<bool> in(af.size(), false);
    for (auto x : s)
        in[x] = true;
    return in;
}

// Bitmask view of a framework for the subset search.
struct MaskFramework {
    std::vector<std::uint64_t> attackers;   // attackers[i]: mask of R-(x_i)
    std::vector<std::uint64_t> attacked;    // attacked[i]: mask of R+(x_i)

    explicit MaskFramework(const Framework& af)
        : attackers(af.size(), 0), attacked(af.size(), 0) {
        for (const auto& a : af.attacks()) {
            attackers[a.target] |= std::uint64_t{1} << a.attacker;
            attacked[a.attacker] |= std::uint64_t{1} << a.target;
        }
    }

    std::uint64_t range(std::uint64_t s) const {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < attacked.size(); ++i)
            if (s >> i & 1)
                out |= attacked[i];
        return out;
    }

    bool conflict_free(std::uint64_t s) const { return (range(s) & s) == 0; }

    std::uint64_t characteristic(std::uint64_t s) const {
        const std::uint64_t hit = range(s);
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < attackers.size(); ++i)
            if ((attackers[i] & ~hit) == 0)
                out |= std::uint64_t{1} << i;
        return out;
    }
};

inline ArgSet unpack(std::uint64_t mask) {
    ArgSet out;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1)
            out.push_back(i);
    return out;
}

} // namespace detail

inline bool is_conflict_free(const Framework& af, const ArgSet& s) {
    const auto in = detail::membership(af, s);
    for (const auto& a : af.attacks())
        if (in[a.attacker] && in[a.target])
            return false;
    return true;
}

/// Every attacker of x is attacked by some member of s.
inline bool defends(const Framework& af, const ArgSet& s, ArgIndex x) {
    const auto in = detail::membership(af, s);
    for (auto y : af.attackers_of(x)) {
        const auto& counters = af.attackers_of(y);
        if (std::none_of(counters.begin(), counters.end(), [&](ArgIndex z) { return in[z]; }))
            return false;
    }
    return true;
}

inline ArgSet characteristic(const Framework& af, const ArgSet& s) {
    detail::check_members(af, s);
    ArgSet out;
    for (ArgIndex x = 0; x < af.size(); ++x)
        if (defends(af, s, x))
            out.push_back(x);
    return out;
}

/// Least fixpoint of the characteristic function, reached from the empty set
/// in at most n steps.
inline ArgSet grounded_extension(const Framework& af) {
    ArgSet current;
    for (;;) {
        ArgSet next = characteristic(af, current);
        if (next == current)
            return current;
        current = std::move(next);
    }
}

/// Orders extensions lexicographically by their sorted member names.
inline void sort_extensions(const Framework& af, std::vector<ArgSet>& extensions) {
    auto key = [&](const ArgSet& s) {
        std::vector<std::string> names;
        for (auto x : s)
            names.push_back(af.name(x));
        std::sort(names.begin(), names.end());
        return names;
    };
    std::vector<std::pair<std::vector<std::string>, ArgSet>> keyed;
    for (auto& e : extensions)
        keyed.emplace_back(key(e), std::move(e));
    std::sort(keyed.begin(), keyed.end());
    extensions.clear();
    for (auto& [k, e] : keyed)
        extensions.push_back(std::move(e));
}

/**
 * All extensions of `af` under `semantics`.
 *
 * Grounded is computed by fixpoint iteration and has no size limit; the other
 * semantics enumerate all 2^n subsets and throw Error when n exceeds `cap`
 * (at most 63).
 */
inline ExtensionSet enumerate(const Framework& af, Semantics semantics,
                              std::size_t cap = default_enumeration_cap) {
    ExtensionSet result{semantics, {}};
    if (semantics == Semantics::grounded) {
        result.extensions.push_back(grounded_extension(af));
        return result;
    }
    if (af.size() > cap || af.size() > 63)
        throw Error("framework has " + std::to_string(af.size()) +
                    " arguments, above the enumeration cap of " + std::to_string(cap));

    const detail::MaskFramework m(af);
    const std::uint64_t all = af.size() == 0 ? 0 : (~std::uint64_t{0} >> (64 - af.size()));
    std::vector<std::uint64_t> admissible;
    std::vector<std::uint64_t> selected;
    for (std::uint64_t s = 0;; ++s) {
        if (m.conflict_free(s)) {
            const std::uint64_t defended = m.characteristic(s);
            switch (semantics) {
            case Semantics::admissible:
            case Semantics::preferred:
                if ((s & ~defended) == 0)
                    admissible.push_back(s);
                break;
            case Semantics::complete:
                if (s == defended)
                    selected.push_back(s);
                break;
            case Semantics::stable:
                if ((s | m.range(s)) == all)
                    selected.push_back(s);
                break;
            case Semantics::grounded:
                break;
            }
        }
        if (s == all)
            break;
    }

    if (semantics == Semantics::admissible) {
        selected = std::move(admissible);
    } else if (semantics == Semantics::preferred) {
        for (auto s : admissible) {
            bool maximal = std::none_of(admissible.begin(), admissible.end(), [&](std::uint64_t t) {
                return t != s && (s & ~t) == 0;
            });
            if (maximal)
                selected.push_back(s);
        }
    }
    for (auto s : selected)
        result.extensions.push_back(detail::unpack(s));
    sort_extensions(af, result.extensions);
    return result;
}

} // namespace argcount
