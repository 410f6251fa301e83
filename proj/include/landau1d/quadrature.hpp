#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <numbers>
#include <vector>

#include "landau1d/errors.hpp"
#include "landau1d/tridiagonal.hpp"

namespace landau1d {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Generalized Gauss-Laguerre rule for the weight u^alpha e^{-u} on [0, inf),
/// built by Golub-Welsch. Weights are normalized to sum to one, i.e. the
/// Gamma(alpha+1) factor is divided out.
inline Rule gauss_laguerre(int n, double alpha) {
    if (n < 1) throw InvalidInput("gauss_laguerre: need at least one node");
    if (!(alpha > -1.0)) throw InvalidInput("gauss_laguerre: alpha must exceed -1");
    std::vector<double> diag(static_cast<std::size_t>(n)), off(static_cast<std::size_t>(n - 1));
    for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(k * (k + alpha));
    std::vector<double> first_row(static_cast<std::size_t>(n), 0.0);
    first_row[0] = 1.0;
    tridiag::implicit_ql(diag, off, first_row, 1);
    Rule rule{std::move(diag), std::move(first_row)};
    for (double& w : rule.weights) w *= w;
    return rule;
}

/// Memoized gauss_laguerre; rules are never evicted.
inline Rule const& cached_gauss_laguerre(int n, double alpha) {
    static std::map<std::pair<int, double>, Rule> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto const key = std::make_pair(n, alpha);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, gauss_laguerre(n, alpha)).first;
    return it->second;
}

/// Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
inline Rule gauss_legendre(int n) {
    if (n < 1) throw InvalidInput("gauss_legendre: need at least one node");
    Rule rule{std::vector<double>(static_cast<std::size_t>(n)),
              std::vector<double>(static_cast<std::size_t>(n))};
    int const half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double const p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double const dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        double const w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

} // namespace landau1d
