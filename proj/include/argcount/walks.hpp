#pragma once

// Exact walk counting over the attack graph, cycle analysis and dispute-tree
// expansion.
//
// Entry (i, j) of A^l is the number of walks of length l from x_j to x_i.
// Counts grow exponentially on cyclic graphs, so everything here uses
// arbitrary-precision integers.

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "argcount/framework.hpp"

namespace argcount {

using BigInt = boost::multiprecision::cpp_int;

/// Square matrix of big integers, row-major.
class BigMatrix {
public:
    BigMatrix() = default;
    explicit BigMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static BigMatrix identity(std::size_t n) {
        BigMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t dimension() const noexcept { return n_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    std::vector<BigInt> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_)};
    }

    friend BigMatrix operator*(const BigMatrix& a, const BigMatrix& b) {
        BigMatrix out(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const BigInt& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const BigMatrix&, const BigMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> data_;
};

/// A^l for a fixed walk length l.
struct WalkCountMatrix {
    std::size_t length = 0;
    BigMatrix counts;
};

namespace detail {

// A * M using the sparse rows of A: row i of the product is the sum of the
// rows of M indexed by the attackers of x_i, accumulated in ascending order.
inline BigMatrix attack_times(const Framework& af, const BigMatrix& m) {
    const std::size_t n = af.size();
    BigMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (auto k : af.attackers_of(i))
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += m(k, j);
    return out;
}

inline BigMatrix attack_big(const Framework& af) {
    BigMatrix a(af.size());
    for (const auto& att : af.attacks())
        a(att.target, att.attacker) = 1;
    return a;
}

} // namespace detail

/// A^length by exponentiation by squaring.
inline WalkCountMatrix walk_count_matrix(const Framework& af, std::size_t length) {
    BigMatrix result = BigMatrix::identity(af.size());
    BigMatrix base = detail::attack_big(af);
    for (std::size_t e = length; e != 0; e >>= 1) {
        if (e & 1)
            result = result * base;
        if (e > 1)
            base = base * base;
    }
    return {length, std::move(result)};
}

/// A^0, A^1, ..., A^max_length by repeated sparse multiplication.
inline std::vector<WalkCountMatrix> walk_count_sequence(const Framework& af, std::size_t max_length) {
    std::vector<WalkCountMatrix> out;
    out.reserve(max_length + 1);
    out.push_back({0, BigMatrix::identity(af.size())});
    for (std::size_t l = 1; l <= max_length; ++l)
        out.push_back({l, detail::attack_times(af, out.back().counts)});
    return out;
}

/// A^l e for l = 0..max_length: entry i counts all walks of length l ending at
/// x_i, i.e. the dispute-tree nodes of x_i at depth l.
inline std::vector<std::vector<BigInt>> walk_totals(const Framework& af, std::size_t max_length) {
    const std::size_t n = af.size();
    std::vector<std::vector<BigInt>> out;
    out.reserve(max_length + 1);
    out.emplace_back(n, BigInt(1));
    for (std::size_t l = 1; l <= max_length; ++l) {
        const auto& prev = out.back();
        std::vector<BigInt> next(n);
        for (std::size_t i = 0; i < n; ++i)
            for (auto j : af.attackers_of(i))
                next[i] += prev[j];
        out.push_back(std::move(next));
    }
    return out;
}

/// |S(from, to, length)|, the number of walks of the given length.
inline BigInt count_walks(const Framework& af, ArgIndex from, ArgIndex to, std::size_t length) {
    af.name(from);
    af.name(to);
    // Long walks on small graphs: log(length) dense products beat length
    // sparse sweeps.
    if (length > 4 * af.size() + 16)
        return walk_count_matrix(af, length).counts(to, from);
    // Propagate a unit vector forward along attacks: after l steps entry y
    // holds the number of l-walks from `from` to y.
    std::vector<BigInt> reach(af.size());
    reach[from] = 1;
    for (std::size_t l = 0; l < length; ++l) {
        std::vector<BigInt> next(af.size());
        for (ArgIndex y = 0; y < af.size(); ++y) {
            if (reach[y] == 0)
                continue;
            for (auto z : af.attacked_by(y))
                next[z] += reach[y];
        }
        reach = std::move(next);
    }
    return reach[to];
}

enum class WalkRole { attacker, defender, neither };

/// x is an l-length attacker of y for odd l and a defender for even l, provided
/// at least one such walk exists.
inline WalkRole classify(const Framework& af, ArgIndex x, ArgIndex y, std::size_t length) {
    if (count_walks(af, x, y, length) == 0)
        return WalkRole::neither;
    return length % 2 == 1 ? WalkRole::attacker : WalkRole::defender;
}

/// True iff the attack digraph has a directed cycle (self-attacks included).
inline bool has_cycle(const Framework& af) {
    enum : unsigned char { white, grey, black };
    std::vector<unsigned char> colour(af.size(), white);
    std::vector<std::pair<ArgIndex, std::size_t>> stack;
    for (ArgIndex start = 0; start < af.size(); ++start) {
        if (colour[start] != white)
            continue;
        colour[start] = grey;
        stack.emplace_back(start, 0);
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            const auto& succ = af.attacked_by(node);
            if (next == succ.size()) {
                colour[node] = black;
                stack.pop_back();
                continue;
            }
            const ArgIndex child = succ[next++];
            if (colour[child] == grey)
                return true;
            if (colour[child] == white) {
                colour[child] = grey;
                stack.emplace_back(child, 0);
            }
        }
    }
    return false;
}

/**
 * Smallest l with A^l = 0, or nullopt when the graph has a cycle (then no
 * power of A vanishes).
 *
 * For an acyclic graph this is one more than the length of its longest walk.
 * The empty framework yields 0.
 */
inline std::optional<std::size_t> nilpotency_index(const Framework& af) {
    if (af.empty())
        return 0;
    if (has_cycle(af))
        return std::nullopt;
    // Longest walk ending at each node, in topological order (Kahn).
    const std::size_t n = af.size();
    std::vector<std::size_t> indegree(n), longest(n, 0), queue;
    for (ArgIndex i = 0; i < n; ++i) {
        indegree[i] = af.attackers_of(i).size();
        if (indegree[i] == 0)
            queue.push_back(i);
    }
    std::size_t best = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const ArgIndex u = queue[head];
        best = std::max(best, longest[u]);
        for (auto v : af.attacked_by(u)) {
            longest[v] = std::max(longest[v], longest[u] + 1);
            if (--indegree[v] == 0)
                queue.push_back(v);
        }
    }
    return best + 1;
}

enum class NodeStatus { defender, attacker };

struct DisputeNode {
    ArgIndex argument;
    std::size_t depth;
    std::optional<std::size_t> parent;
    std::vector<std::size_t> children;

    NodeStatus status() const { return depth % 2 == 0 ? NodeStatus::defender : NodeStatus::attacker; }
};

/**
 * A dispute tree truncated at a depth limit. Nodes are stored level by level,
 * so the root is node 0 and each level is a contiguous range.
 */
struct DisputeTree {
    ArgIndex root = 0;
    std::size_t depth_limit = 0;
    std::vector<DisputeNode> nodes;
    std::vector<std::size_t> level_offsets;  // level d spans [offsets[d], offsets[d+1])

    std::size_t levels() const { return level_offsets.empty() ? 0 : level_offsets.size() - 1; }

    std::size_t level_size(std::size_t depth) const {
        if (depth >= levels())
            return 0;
        return level_offsets[depth + 1] - level_offsets[depth];
    }

    std::vector<ArgIndex> level_arguments(std::size_t depth) const {
        std::vector<ArgIndex> out;
        if (depth >= levels())
            return out;
        for (auto k = level_offsets[depth]; k < level_offsets[depth + 1]; ++k)
            out.push_back(nodes[k].argument);
        return out;
    }
};

inline constexpr std::size_t default_node_budget = 1'000'000;

/// Expands the dispute tree of `root` breadth-first down to `depth_limit`.
/// Branches are never pruned, so cyclic graphs give trees that grow with the
/// limit; exceeding `node_budget` nodes throws Error.
inline DisputeTree dispute_tree(const Framework& af, ArgIndex root, std::size_t depth_limit,
                                std::size_t node_budget = default_node_budget) {
    af.name(root);
    DisputeTree tree;
    tree.root = root;
    tree.depth_limit = depth_limit;
    tree.nodes.push_back({root, 0, std::nullopt, {}});
    tree.level_offsets = {0, 1};
    for (std::size_t depth = 0; depth < depth_limit; ++depth) {
        const std::size_t begin = tree.level_offsets[depth];
        const std::size_t end = tree.level_offsets[depth + 1];
        for (std::size_t k = begin; k < end; ++k) {
            for (auto attacker : af.attackers_of(tree.nodes[k].argument)) {
                if (tree.nodes.size() >= node_budget)
                    throw Error("dispute tree exceeds the node budget of " +
                                std::to_string(node_budget));
                tree.nodes[k].children.push_back(tree.nodes.size());
                tree.nodes.push_back({attacker, depth + 1, k, {}});
            }
        }
        if (tree.nodes.size() == end)
            break;
        tree.level_offsets.push_back(tree.nodes.size());
    }
    return tree;
}

} // namespace argcount
