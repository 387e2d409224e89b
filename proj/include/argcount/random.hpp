#pragma once

// Seeded generators of small frameworks for property batches.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "argcount/framework.hpp"

namespace argcount {

inline std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("a" + std::to_string(i));
    return names;
}

/// Each ordered pair (self-attacks included) is an attack with probability
/// `density`.
template <class Rng>
Framework random_framework(Rng& rng, std::size_t n, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<Attack> attacks;
    for (ArgIndex i = 0; i < n; ++i)
        for (ArgIndex j = 0; j < n; ++j)
            if (coin(rng))
                attacks.push_back({i, j});
    return Framework::from_indices(default_names(n), std::move(attacks));
}

/// a0 -> a1 -> ... -> a(n-1) -> a0; n = 1 is a single self-attacker.
inline Framework cycle_framework(std::size_t n) {
    std::vector<Attack> attacks;
    for (ArgIndex i = 0; i < n; ++i)
        attacks.push_back({i, (i + 1) % n});
    return Framework::from_indices(default_names(n), std::move(attacks));
}

template <class Rng>
std::vector<ArgIndex> random_permutation(Rng& rng, std::size_t n) {
    std::vector<ArgIndex> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

} // namespace argcount
