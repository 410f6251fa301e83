#pragma once
// Symmetric tridiagonal eigenvalue kernels: Sturm-count bisection, inverse
// iteration and implicit QL. A matrix is given by its diagonal (length n) and
// off-diagonal (length n-1).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "landau1d/errors.hpp"

namespace landau1d::tridiag {

/// Number of eigenvalues strictly below sigma (LDL^T inertia).
inline std::size_t sturm_count(std::span<double const> diag, std::span<double const> off,
                               double sigma) {
    std::size_t count = 0;
    double q = 1.0;
    double const tiny = std::numeric_limits<double>::min();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double const e2 = i > 0 ? off[i - 1] * off[i - 1] : 0.0;
        q = diag[i] - sigma - (i > 0 ? e2 / q : 0.0);
        if (q == 0.0) q = -tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

inline std::pair<double, double> gershgorin(std::span<double const> diag,
                                            std::span<double const> off) {
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    std::size_t const n = diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(off[i - 1]);
        if (i + 1 < n) r += std::abs(off[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    return {lo, hi};
}

struct Bracket {
    double lower;
    double upper;
    double mid() const { return 0.5 * (lower + upper); }
};

/// Bracket the k-th smallest eigenvalue (0-based) to width <= abs_tol.
inline Bracket bisect(std::span<double const> diag, std::span<double const> off, std::size_t k,
                      double abs_tol) {
    if (diag.empty() || k >= diag.size()) throw InvalidInput("bisect: eigenvalue index out of range");
    auto [lo, hi] = gershgorin(diag, off);
    double const scale = std::max(std::abs(lo), std::abs(hi));
    lo -= 1e-12 * scale + 1e-300;
    hi += 1e-12 * scale + 1e-300;
    double const floor_tol = 4.0 * std::numeric_limits<double>::epsilon() * scale;
    double const tol = std::max(abs_tol, floor_tol);
    for (int it = 0; it < 2000 && hi - lo > tol; ++it) {
        double const mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count(diag, off, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

/// Solve (T - sigma I) x = b for a positive definite shifted matrix (LDL^T, no pivoting).
inline std::vector<double> shifted_solve(std::span<double const> diag, std::span<double const> off,
                                         double sigma, std::span<double const> rhs) {
    std::size_t const n = diag.size();
    std::vector<double> d(n), l(n > 0 ? n - 1 : 0), y(rhs.begin(), rhs.end());
    double const tiny = std::numeric_limits<double>::min() * 1e10;
    d[0] = diag[0] - sigma;
    if (std::abs(d[0]) < tiny) d[0] = tiny;
    for (std::size_t i = 1; i < n; ++i) {
        l[i - 1] = off[i - 1] / d[i - 1];
        d[i] = diag[i] - sigma - l[i - 1] * off[i - 1];
        if (std::abs(d[i]) < tiny) d[i] = tiny;
        y[i] -= l[i - 1] * y[i - 1];
    }
    for (std::size_t i = 0; i < n; ++i) y[i] /= d[i];
    for (std::size_t i = n - 1; i-- > 0;) y[i] -= l[i] * y[i + 1];
    return y;
}

/// Eigenvector for an eigenvalue bracketed from below by sigma. Returned with unit
/// Euclidean norm and positive largest component.
inline std::vector<double> inverse_iteration(std::span<double const> diag,
                                             std::span<double const> off, double sigma,
                                             int iterations = 4) {
    std::size_t const n = diag.size();
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int it = 0; it < iterations; ++it) {
        v = shifted_solve(diag, off, sigma, v);
        double norm = 0.0;
        for (double a : v) norm += a * a;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw NonConvergence("inverse iteration produced a degenerate vector", {});
        for (double& a : v) a /= norm;
    }
    auto const big = std::max_element(v.begin(), v.end(),
                                      [](double a, double b) { return std::abs(a) < std::abs(b); });
    if (*big < 0.0)
        for (double& a : v) a = -a;
    return v;
}

/// Implicit QL with Wilkinson shifts. On return `diag` holds the eigenvalues
/// (ascending) and `rows` (row-major, `row_count` x n) has been multiplied by the
/// accumulated rotations. Start from identity rows to get eigenvector components;
/// a single row e_0 gives the first components only.
inline void implicit_ql(std::vector<double>& diag, std::vector<double> off,
                        std::vector<double>& rows, std::size_t row_count) {
    int const n = static_cast<int>(diag.size());
    if (n == 0) return;
    std::vector<double>& d = diag;
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i + 1 < n; ++i) e[i] = off[i];
    auto z = [&](std::size_t r, int c) -> double& { return rows[r * n + c]; };
    double const eps = std::numeric_limits<double>::epsilon();

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double const dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw NonConvergence("implicit QL did not converge", {});
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                bool underflow = false;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double const b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (std::size_t k = 0; k < row_count; ++k) {
                        f = z(k, i + 1);
                        z(k, i + 1) = s * z(k, i) + c * f;
                        z(k, i) = c * z(k, i) - s * f;
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    // ascending order, permuting the tracked rows alongside
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
    std::vector<double> sorted_d(static_cast<std::size_t>(n));
    std::vector<double> sorted_rows(rows.size());
    for (int j = 0; j < n; ++j) {
        sorted_d[j] = d[order[j]];
        for (std::size_t k = 0; k < row_count; ++k) sorted_rows[k * n + j] = z(k, order[j]);
    }
    d = std::move(sorted_d);
    rows = std::move(sorted_rows);
}

struct Eigensystem {
    std::vector<double> values;
    std::vector<double> vectors; // column j is the eigenvector of values[j], row-major n x n
};

inline Eigensystem full_eigensystem(std::span<double const> diag, std::span<double const> off) {
    std::size_t const n = diag.size();
    Eigensystem es{std::vector<double>(diag.begin(), diag.end()), std::vector<double>(n * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) es.vectors[i * n + i] = 1.0;
    implicit_ql(es.values, std::vector<double>(off.begin(), off.end()), es.vectors, n);
    return es;
}

} // namespace landau1d::tridiag
