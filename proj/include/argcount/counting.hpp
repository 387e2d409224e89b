#pragma once

// The attacker/defender counting model.
//
// The simple model sums signed walk counts, sum_{l<=k} (-1)^l A^l e, where
// defenders (even walks) add and attackers (odd walks) subtract. It diverges
// on cyclic graphs. The improved model damps walks of length l by alpha^l and
// scales A by N = ||A||_inf:
//
//     v(k) = sum_{l<=k} (-1)^l alpha^l (A/N)^l e,
//
// which stays in [0,1] and converges to the unique solution of
// (I + alpha A/N) v = e. The counting semantics is that limit; iterate()
// approaches it through v(k) = e - alpha (A/N) v(k-1).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "argcount/framework.hpp"
#include "argcount/walks.hpp"

namespace argcount {

struct CountingParams {
    double alpha = 0.98;
    double epsilon = 1e-3;
    std::size_t max_iter = 10'000;

    void validate() const {
        if (!(alpha > 0.0 && alpha < 1.0))
            throw Error("damping factor alpha must lie in (0,1), got " + std::to_string(alpha));
        if (!(epsilon > 0.0) || !std::isfinite(epsilon))
            throw Error("tolerance epsilon must be positive, got " + std::to_string(epsilon));
        if (max_iter == 0)
            throw Error("max_iter must be positive");
    }
};

/// Per-argument strengths, index-aligned with the framework.
struct StrengthVector {
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double operator[](ArgIndex i) const { return values[i]; }

    friend bool operator==(const StrengthVector&, const StrengthVector&) = default;
};

/// The iterates v(0)..v(k) of one run together with their sup-norm steps.
/// deltas[k-1] is ||v(k) - v(k-1)||_inf.
struct ValuationTrace {
    double alpha = 0.0;
    double epsilon = 0.0;
    double normalization = 0.0;
    std::vector<std::vector<double>> iterates;
    std::vector<double> deltas;

    std::size_t iterations() const noexcept { return iterates.empty() ? 0 : iterates.size() - 1; }
};

struct IterationResult {
    StrengthVector strengths;
    ValuationTrace trace;
    bool converged = false;
};

class NonConvergence : public Error {
public:
    explicit NonConvergence(IterationResult result)
        : Error("no convergence within " + std::to_string(result.trace.iterations()) +
                " iterations (last delta " +
                std::to_string(result.trace.deltas.empty() ? 0.0 : result.trace.deltas.back()) + ")"),
          result_(std::move(result)) {}

    const IterationResult& result() const noexcept { return result_; }

private:
    IterationResult result_;
};

/// sum_{l=0..k} (-1)^l A^l e, exactly.
inline std::vector<BigInt> simple_counting(const Framework& af, std::size_t k) {
    const auto totals = walk_totals(af, k);
    std::vector<BigInt> v(af.size());
    for (std::size_t l = 0; l <= k; ++l)
        for (std::size_t i = 0; i < af.size(); ++i) {
            if (l % 2 == 0)
                v[i] += totals[l][i];
            else
                v[i] -= totals[l][i];
        }
    return v;
}

/// N = ||A||_inf = max_i |R-(x_i)|.
inline double normalization_factor(const Framework& af) {
    return static_cast<double>(attack_matrix(af).infinity_norm());
}

/**
 * Fixed-point iteration v(k) = e - alpha (A/N) v(k-1) from v(0) = e.
 *
 * Stops once the sup-norm step is <= epsilon, or after max_iter steps with
 * converged = false. Each step costs O(|R|). When the framework has no
 * attacks (N = 0) the result is e with no iterations.
 */
inline IterationResult iterate(const Framework& af, const CountingParams& params) {
    params.validate();
    const std::size_t n = af.size();
    const double norm = normalization_factor(af);

    IterationResult result;
    result.trace.alpha = params.alpha;
    result.trace.epsilon = params.epsilon;
    result.trace.normalization = norm;
    result.trace.iterates.emplace_back(n, 1.0);
    if (norm == 0.0) {
        result.strengths.values = result.trace.iterates.back();
        result.converged = true;
        return result;
    }

    const double scale = params.alpha / norm;
    std::vector<double> next(n);
    for (std::size_t k = 1; k <= params.max_iter; ++k) {
        const auto& prev = result.trace.iterates.back();
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (auto j : af.attackers_of(i))
                sum += prev[j];
            next[i] = 1.0 - scale * sum;
            delta = std::max(delta, std::abs(next[i] - prev[i]));
        }
        result.trace.iterates.push_back(next);
        result.trace.deltas.push_back(delta);
        if (delta <= params.epsilon) {
            result.converged = true;
            break;
        }
    }
    result.strengths.values = result.trace.iterates.back();
    return result;
}

/// Solves (I + alpha A/N) v = e by LU with partial pivoting. The matrix is
/// strictly diagonally dominant by rows for alpha < 1, hence nonsingular.
inline StrengthVector solve_direct(const Framework& af, double alpha) {
    CountingParams{alpha, 1.0, 1}.validate();
    const auto n = static_cast<Eigen::Index>(af.size());
    const double norm = normalization_factor(af);
    if (n == 0)
        return {};
    if (norm == 0.0)
        return {std::vector<double>(af.size(), 1.0)};

    Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n);
    for (const auto& a : af.attacks())
        system(static_cast<Eigen::Index>(a.target), static_cast<Eigen::Index>(a.attacker)) +=
            alpha / norm;
    const Eigen::VectorXd v = system.partialPivLu().solve(Eigen::VectorXd::Ones(n));
    return {std::vector<double>(v.data(), v.data() + n)};
}

/// The truncated damped series sum_{l<=k} (-1)^l alpha^l (A/N)^l e, summed
/// term by term.
inline StrengthVector improved_counting(const Framework& af, double alpha, std::size_t k) {
    CountingParams{alpha, 1.0, 1}.validate();
    const std::size_t n = af.size();
    const double norm = normalization_factor(af);
    std::vector<double> term(n, 1.0), total(n, 1.0);
    if (norm == 0.0)
        return {total};
    for (std::size_t l = 1; l <= k; ++l) {
        std::vector<double> next(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (auto j : af.attackers_of(i))
                next[i] += term[j];
            next[i] *= -alpha / norm;
        }
        term = std::move(next);
        for (std::size_t i = 0; i < n; ++i)
            total[i] += term[i];
    }
    return {total};
}

/**
 * The attacker and defender counting semantics, approximated to within the
 * tolerance of `params`. The exact semantics is the k -> infinity limit of
 * the improved model; this returns the first iterate whose step is <= epsilon.
 *
 * Throws NonConvergence (carrying the last trace) when max_iter runs out.
 */
inline StrengthVector counting_semantics(const Framework& af, const CountingParams& params = {}) {
    auto result = iterate(af, params);
    if (!result.converged)
        throw NonConvergence(std::move(result));
    return std::move(result.strengths);
}

} // namespace argcount
