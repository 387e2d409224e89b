#pragma once

// Abstract argumentation frameworks: arguments, the attack relation and the
// attack matrix derived from it.

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace argcount {

using ArgIndex = std::size_t;

/// Sorted, duplicate-free list of argument indices.
using ArgSet = std::vector<ArgIndex>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownArgument : public Error {
public:
    explicit UnknownArgument(const std::string& name)
        : Error("unknown argument '" + name + "'"), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct Attack {
    ArgIndex attacker;
    ArgIndex target;

    friend auto operator<=>(const Attack&, const Attack&) = default;
};

/**
 * An argumentation framework <X, R>.
 *
 * Arguments are addressed by dense indices in the order their names were
 * supplied. The attack relation is a set: duplicate pairs are collapsed and
 * self-attacks are allowed. Instances are immutable once built.
 */
class Framework {
public:
    Framework() = default;

    /// Throws Error on duplicate or empty names and UnknownArgument for
    /// attacks whose endpoints are not in `names`.
    Framework(std::vector<std::string> names,
              const std::vector<std::pair<std::string, std::string>>& attacks)
        : names_(std::move(names)) {
        index_names();
        std::vector<Attack> resolved;
        resolved.reserve(attacks.size());
        for (const auto& [from, to] : attacks)
            resolved.push_back({index_of(from), index_of(to)});
        set_attacks(std::move(resolved));
    }

    /// Index-based construction; every endpoint must be < names.size().
    static Framework from_indices(std::vector<std::string> names, std::vector<Attack> attacks) {
        Framework af;
        af.names_ = std::move(names);
        af.index_names();
        for (const auto& a : attacks) {
            if (a.attacker >= af.size() || a.target >= af.size())
                throw Error("attack endpoint out of range");
        }
        af.set_attacks(std::move(attacks));
        return af;
    }

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    const std::vector<std::string>& names() const noexcept { return names_; }

    const std::string& name(ArgIndex i) const {
        check(i);
        return names_[i];
    }

    ArgIndex index_of(const std::string& name) const {
        auto it = lookup_.find(name);
        if (it == lookup_.end())
            throw UnknownArgument(name);
        return it->second;
    }

    bool contains(const std::string& name) const { return lookup_.count(name) != 0; }

    /// Attack pairs sorted by (attacker, target).
    const std::vector<Attack>& attacks() const noexcept { return attacks_; }

    bool attacks(ArgIndex from, ArgIndex to) const {
        check(from);
        check(to);
        return std::binary_search(attacked_by_[from].begin(), attacked_by_[from].end(), to);
    }

    /// R-(x): the arguments attacking x, ascending.
    const ArgSet& attackers_of(ArgIndex x) const {
        check(x);
        return attackers_[x];
    }

    /// R+(x): the arguments x attacks, ascending.
    const ArgSet& attacked_by(ArgIndex x) const {
        check(x);
        return attacked_by_[x];
    }

    friend bool operator==(const Framework& a, const Framework& b) {
        return a.names_ == b.names_ && a.attacks_ == b.attacks_;
    }

private:
    void check(ArgIndex i) const {
        if (i >= names_.size())
            throw UnknownArgument("#" + std::to_string(i));
    }

    void index_names() {
        lookup_.reserve(names_.size());
        for (ArgIndex i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw Error("argument names must be non-empty");
            if (!lookup_.emplace(names_[i], i).second)
                throw Error("duplicate argument '" + names_[i] + "'");
        }
    }

    void set_attacks(std::vector<Attack> attacks) {
        std::sort(attacks.begin(), attacks.end());
        attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());
        attacks_ = std::move(attacks);
        attackers_.assign(size(), {});
        attacked_by_.assign(size(), {});
        // attacks_ is sorted by attacker, so attacked_by_ rows come out sorted
        for (const auto& a : attacks_) {
            attackers_[a.target].push_back(a.attacker);
            attacked_by_[a.attacker].push_back(a.target);
        }
        for (auto& row : attackers_)
            std::sort(row.begin(), row.end());
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, ArgIndex> lookup_;
    std::vector<Attack> attacks_;
    std::vector<ArgSet> attackers_;
    std::vector<ArgSet> attacked_by_;
};

inline Framework build_af(std::vector<std::string> names,
                          const std::vector<std::pair<std::string, std::string>>& attacks) {
    return Framework(std::move(names), attacks);
}

/**
 * The attack matrix A with a_ij = 1 iff argument j attacks argument i, i.e.
 * the transpose of the attack digraph's adjacency matrix.
 *
 * Stored as the column indices of the nonzeros of each row, which are exactly
 * the attacker lists of the framework.
 */
class AttackMatrix {
public:
    explicit AttackMatrix(const Framework& af) : rows_(af.size()) {
        for (ArgIndex i = 0; i < af.size(); ++i)
            rows_[i] = af.attackers_of(i);
    }

    std::size_t dimension() const noexcept { return rows_.size(); }

    int operator()(std::size_t row, std::size_t col) const {
        const auto& r = rows_.at(row);
        if (col >= rows_.size())
            throw std::out_of_range("attack matrix column");
        return std::binary_search(r.begin(), r.end(), col) ? 1 : 0;
    }

    /// Column indices of the nonzero entries of `row`, ascending.
    const std::vector<std::size_t>& row_nonzeros(std::size_t row) const { return rows_.at(row); }

    std::size_t row_sum(std::size_t row) const { return rows_.at(row).size(); }

    std::size_t column_sum(std::size_t col) const {
        std::size_t total = 0;
        for (const auto& r : rows_)
            total += std::binary_search(r.begin(), r.end(), col) ? 1 : 0;
        return total;
    }

    std::size_t nonzeros() const {
        std::size_t total = 0;
        for (const auto& r : rows_)
            total += r.size();
        return total;
    }

    /// ||A||_inf, the largest row sum.
    std::size_t infinity_norm() const {
        std::size_t best = 0;
        for (const auto& r : rows_)
            best = std::max(best, r.size());
        return best;
    }

    std::vector<std::vector<int>> dense() const {
        std::vector<std::vector<int>> out(dimension(), std::vector<int>(dimension(), 0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (auto j : rows_[i])
                out[i][j] = 1;
        return out;
    }

private:
    std::vector<std::vector<std::size_t>> rows_;
};

inline AttackMatrix attack_matrix(const Framework& af) { return AttackMatrix(af); }

inline ArgSet attackers_of(const Framework& af, ArgIndex x) { return af.attackers_of(x); }
inline ArgSet attacked_by(const Framework& af, ArgIndex x) { return af.attacked_by(x); }

/**
 * Relabels `af` through the bijection `mapping` (old name -> new name).
 *
 * Argument i of the result is mapping[name(i)], so x R1 y iff t(x) R2 t(y).
 * Throws Error unless the mapping is total on af's names, mentions no other
 * names and is injective.
 */
inline Framework apply_isomorphism(const Framework& af,
                                   const std::map<std::string, std::string>& mapping) {
    if (mapping.size() != af.size())
        throw Error("isomorphism must map every argument exactly once");
    std::vector<std::string> renamed;
    renamed.reserve(af.size());
    for (const auto& name : af.names()) {
        auto it = mapping.find(name);
        if (it == mapping.end())
            throw Error("isomorphism does not map '" + name + "'");
        renamed.push_back(it->second);
    }
    std::vector<std::string> sorted = renamed;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("isomorphism is not injective");
    return Framework::from_indices(std::move(renamed), af.attacks());
}

/// Same framework with arguments re-indexed: position k of the result holds
/// old argument order[k]. `order` must be a permutation of 0..n-1.
inline Framework reorder(const Framework& af, const std::vector<ArgIndex>& order) {
    if (order.size() != af.size())
        throw Error("reorder: permutation has wrong length");
    std::vector<ArgIndex> position(af.size(), af.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (order[k] >= af.size() || position[order[k]] != af.size())
            throw Error("reorder: not a permutation");
        position[order[k]] = k;
    }
    std::vector<std::string> names;
    names.reserve(af.size());
    for (auto old : order)
        names.push_back(af.name(old));
    std::vector<Attack> attacks;
    attacks.reserve(af.attacks().size());
    for (const auto& a : af.attacks())
        attacks.push_back({position[a.attacker], position[a.target]});
    return Framework::from_indices(std::move(names), std::move(attacks));
}

} // namespace argcount
