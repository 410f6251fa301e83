#pragma once
// Exact two-electron ground state on an n x n tensor grid.
//
//   H = h1 (x) 1 + 1 (x) h1 + diag W(x_i - x_j),   h1 = -(1/M) d^2/dx^2 - Z V~.
//
// Wavefunctions are stored as n x n matrices X, so H X = h1 X + X h1 + W o X.
// Smallest eigenvalue by single-vector LOBPCG; the preconditioner inverts the
// separable part exactly in the eigenbasis of h1 (fast diagonalization).

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "landau1d/errors.hpp"
#include "landau1d/spectral.hpp"

namespace landau1d {

struct TwoElectronOptions {
    double tol = 1e-9;  // residual norm target, relative to max(1, |E|)
    int max_iterations = 300;
    bool symmetric = true;       // restrict to phi(x1, x2) = phi(x2, x1)
    bool with_interaction = true; // false drops W (separability checks)
    int max_points = 600;
    unsigned seed = 7;            // unrestricted runs start from a seeded perturbation
};

struct TwoElectronResult {
    double energy = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

namespace detail {

class TwoBodyOperator {
public:
    TwoBodyOperator(DiscreteOperator const& h1, std::vector<double> const& wtab)
        : n_(static_cast<Eigen::Index>(h1.diagonal.size())), diag_(n_), off_(n_ > 0 ? n_ - 1 : 0), w_(n_, n_) {
        for (Eigen::Index i = 0; i < n_; ++i) diag_(i) = h1.diagonal[i];
        for (Eigen::Index i = 0; i + 1 < n_; ++i) off_(i) = h1.off_diagonal[i];
        for (Eigen::Index i = 0; i < n_; ++i)
            for (Eigen::Index j = 0; j < n_; ++j) w_(i, j) = wtab.empty() ? 0.0 : wtab[std::abs(i - j)];
    }

    Eigen::MatrixXd apply(Eigen::MatrixXd const& x) const {
        Eigen::MatrixXd y = tri_left(x);
        y += tri_left(x.transpose()).transpose();
        y += w_.cwiseProduct(x);
        return y;
    }

private:
    Eigen::MatrixXd tri_left(Eigen::MatrixXd const& x) const {
        Eigen::MatrixXd y = diag_.asDiagonal() * x;
        if (n_ > 1) {
            y.topRows(n_ - 1) += off_.asDiagonal() * x.bottomRows(n_ - 1);
            y.bottomRows(n_ - 1) += off_.asDiagonal() * x.topRows(n_ - 1);
        }
        return y;
    }

    Eigen::Index n_;
    Eigen::VectorXd diag_;
    Eigen::VectorXd off_;
    Eigen::MatrixXd w_;
};

inline double frob_dot(Eigen::MatrixXd const& a, Eigen::MatrixXd const& b) { return (a.array() * b.array()).sum(); }

} // namespace detail

/// Lowest eigenvalue of the two-electron operator with one-body part `h1` and
/// interaction table W(kh) (empty table means no interaction).
inline TwoElectronResult two_electron_ground(DiscreteOperator const& h1, std::vector<double> const& wtab,
                                             TwoElectronOptions const& opts = {}) {
    auto const n = static_cast<Eigen::Index>(h1.diagonal.size());
    if (n > opts.max_points)
        throw SizeError("exact_two_electron: " + std::to_string(n) + " points per axis exceeds the limit of " +
                        std::to_string(opts.max_points));
    detail::TwoBodyOperator const H(h1, wtab);

    auto const es = tridiag::full_eigensystem(h1.diagonal, h1.off_diagonal);
    Eigen::MatrixXd Q(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) Q(i, j) = es.vectors[static_cast<std::size_t>(i * n + j)];
    Eigen::VectorXd lam(n);
    for (Eigen::Index i = 0; i < n; ++i) lam(i) = es.values[i];
    double const gap = n > 1 ? std::max(lam(1) - lam(0), 1e-12) : 1.0;
    Eigen::MatrixXd denom(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) denom(i, j) = lam(i) + lam(j) - 2.0 * lam(0) + gap;

    auto precondition = [&](Eigen::MatrixXd const& r) {
        Eigen::MatrixXd t = Q.transpose() * r * Q;
        t.array() /= denom.array();
        return Eigen::MatrixXd(Q * t * Q.transpose());
    };
    auto symmetrize = [&](Eigen::MatrixXd& x) {
        if (opts.symmetric) x = 0.5 * (x + x.transpose()).eval();
    };

    Eigen::MatrixXd x = Q.col(0) * Q.col(0).transpose();
    if (!opts.symmetric && n > 1) {
        // break the exchange symmetry so an antisymmetric ground state could be found
        std::srand(opts.seed);
        Eigen::MatrixXd pert = Eigen::MatrixXd::Random(n, n);
        x += 1e-2 * pert;
    }
    x /= x.norm();
    Eigen::MatrixXd hx = H.apply(x);
    double lambda = detail::frob_dot(x, hx);
    Eigen::MatrixXd p;
    bool have_p = false;
    TwoElectronResult res;

    for (int it = 1; it <= opts.max_iterations; ++it) {
        Eigen::MatrixXd r = hx - lambda * x;
        double const rnorm = r.norm();
        res.iterations = it;
        res.residual = rnorm;
        res.energy = lambda;
        if (rnorm <= opts.tol * std::max(1.0, std::abs(lambda))) return res;

        Eigen::MatrixXd w = precondition(r);
        symmetrize(w);
        std::vector<Eigen::MatrixXd> basis{x};
        std::vector<Eigen::MatrixXd> hbasis{hx};
        auto add = [&](Eigen::MatrixXd v) {
            for (auto const& b : basis) v -= detail::frob_dot(b, v) * b;
            for (auto const& b : basis) v -= detail::frob_dot(b, v) * b;
            double const nv = v.norm();
            if (nv < 1e-13) return;
            v /= nv;
            hbasis.push_back(H.apply(v));
            basis.push_back(std::move(v));
        };
        add(w);
        if (have_p) add(p);

        auto const k = static_cast<Eigen::Index>(basis.size());
        Eigen::MatrixXd a(k, k);
        for (Eigen::Index i = 0; i < k; ++i)
            for (Eigen::Index j = 0; j < k; ++j) a(i, j) = detail::frob_dot(basis[i], hbasis[j]);
        a = 0.5 * (a + a.transpose()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(a);
        Eigen::VectorXd c = small.eigenvectors().col(0);

        Eigen::MatrixXd xn = c(0) * basis[0];
        Eigen::MatrixXd hxn = c(0) * hbasis[0];
        Eigen::MatrixXd pn = Eigen::MatrixXd::Zero(n, n);
        for (Eigen::Index i = 1; i < k; ++i) {
            xn += c(i) * basis[i];
            hxn += c(i) * hbasis[i];
            pn += c(i) * basis[i];
        }
        double const nx = xn.norm();
        x = xn / nx;
        hx = hxn / nx;
        symmetrize(x);
        lambda = detail::frob_dot(x, hx);
        p = pn;
        have_p = pn.norm() > 0.0;
    }
    throw NonConvergence("exact_two_electron: LOBPCG did not converge", {res.residual});
}

/// Lowest eigenvalue of the discretized two-electron model operator.
inline TwoElectronResult exact_two_electron_solve(double Z, double B, ModelSpec const& model, Grid1D const& grid,
                                                  TwoElectronOptions const& opts = {}) {
    if (grid.size() > opts.max_points)
        throw SizeError("exact_two_electron: " + std::to_string(grid.size()) + " points per axis exceeds the limit of " +
                        std::to_string(opts.max_points));
    FieldParams const fp(Z, B);
    auto const h1 = discretize_values(grid, fp.M(), detail::nuclear_values(model, Z, grid));
    std::vector<double> wtab;
    if (opts.with_interaction) wtab = interaction_table(model, grid);
    return two_electron_ground(h1, wtab, opts);
}

inline double exact_two_electron(double Z, double B, ModelSpec const& model, Grid1D const& grid, double tol = 1e-9) {
    TwoElectronOptions opts;
    opts.tol = tol;
    return exact_two_electron_solve(Z, B, model, grid, opts).energy;
}

} // namespace landau1d
