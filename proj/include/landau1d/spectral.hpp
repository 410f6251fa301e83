#pragma once
// Finite-difference solvers for the effective one-dimensional problems in
// scaled units: kinetic term -(1/M) d^2/dx^2 with M = B^{-1/2}, potentials at B = 1.
// Dirichlet boundary at +-L.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "landau1d/errors.hpp"
#include "landau1d/grid.hpp"
#include "landau1d/models.hpp"
#include "landau1d/tridiagonal.hpp"

namespace landau1d {

struct DiscreteOperator {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;
    Grid1D grid;
    double M;
};

inline DiscreteOperator discretize_values(Grid1D const& grid, double M, std::vector<double> const& potential) {
    if (!(M > 0.0)) throw InvalidInput("discretize: M must be positive");
    if (potential.size() != static_cast<std::size_t>(grid.size()))
        throw InvalidInput("discretize: potential length does not match grid");
    double const h = grid.spacing();
    double const k = 1.0 / (M * h * h);
    DiscreteOperator op{std::vector<double>(potential.size()),
                        std::vector<double>(potential.size() - 1, -k), grid, M};
    for (std::size_t i = 0; i < potential.size(); ++i) {
        if (!std::isfinite(potential[i]))
            throw InvalidInput("discretize: potential not finite at x=" + std::to_string(grid.node(int(i))));
        op.diagonal[i] = 2.0 * k + potential[i];
    }
    return op;
}

inline DiscreteOperator discretize(Grid1D const& grid, double M, std::function<double(double)> const& potential) {
    auto const xs = grid.nodes();
    std::vector<double> v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v[i] = potential(xs[i]);
    return discretize_values(grid, M, v);
}

struct GroundState {
    double energy;
    std::vector<double> vector; // sum v_i^2 h = 1, positive
};

inline GroundState ground_state(DiscreteOperator const& op, double tol = 1e-12) {
    auto const br = tridiag::bisect(op.diagonal, op.off_diagonal, 0, tol);
    double const lambda = br.mid();
    auto v = tridiag::inverse_iteration(op.diagonal, op.off_diagonal, br.lower, 3);
    std::size_t const n = v.size();
    auto residual = [&] {
        double r = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double t = (op.diagonal[i] - lambda) * v[i];
            if (i > 0) t += op.off_diagonal[i - 1] * v[i - 1];
            if (i + 1 < n) t += op.off_diagonal[i] * v[i + 1];
            r += t * t;
        }
        return std::sqrt(r);
    };
    double const scale = std::abs(op.diagonal[0]) + 2.0 * std::abs(op.off_diagonal.empty() ? 0.0 : op.off_diagonal[0]);
    double const target = 1e-7 * std::max(1.0, scale);
    double res = residual();
    for (int extra = 0; extra < 20 && res > target; ++extra) {
        v = tridiag::inverse_iteration(op.diagonal, op.off_diagonal, br.lower, 6 + 4 * extra);
        res = residual();
    }
    if (res > target)
        throw AccuracyError("ground_state: eigenvector residual too large", lambda, res);
    double const s = 1.0 / std::sqrt(op.grid.spacing());
    for (double& a : v) a *= s;
    return {lambda, std::move(v)};
}

namespace detail {

/// Probability mass within `nodes` grid points of either boundary.
inline double edge_mass(std::vector<double> const& v, double h, int nodes = 5) {
    double m = 0.0;
    int const n = static_cast<int>(v.size());
    for (int i = 0; i < std::min(nodes, n); ++i) m += (v[i] * v[i] + v[n - 1 - i] * v[n - 1 - i]) * h;
    return m;
}

inline std::vector<double> nuclear_values(ModelSpec const& model, double Z, Grid1D const& grid) {
    auto const xs = grid.nodes();
    std::vector<double> u(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) u[i] = -Z * model.nuclear(xs[i]);
    return u;
}

} // namespace detail

/// Heuristic half extent: max(20/(Z min(1, sqrt B)), 5 sqrt(nu+1), 2 rho).
inline double default_half_extent(double Z, double B, ModelSpec const& model, double rho = 0.0) {
    double const L = std::max({20.0 / (Z * std::min(1.0, std::sqrt(B))), 5.0 * std::sqrt(model.nu + 1.0), 2.0 * rho});
    return L;
}

/// Grid with the heuristic extent and the given spacing (rounded to an odd count).
inline Grid1D default_grid(double Z, double B, ModelSpec const& model, double spacing = 0.02, double rho = 0.0) {
    double const L = default_half_extent(Z, B, model, rho);
    int half = static_cast<int>(std::ceil(L / spacing));
    return Grid1D(half * spacing, 2 * half + 1);
}

/// e_0(1, Z, sqrt B): ground state of -sqrt(B) d^2/dx^2 - Z V~(x).
inline double single_electron_energy(double Z, double B, ModelSpec const& model, Grid1D const& grid,
                                     double tol = 1e-12) {
    FieldParams const fp(Z, B);
    auto const op = discretize_values(grid, fp.M(), detail::nuclear_values(model, Z, grid));
    auto const gs = ground_state(op, tol);
    double const mass = detail::edge_mass(gs.vector, grid.spacing());
    if (mass > 1e-6)
        throw DomainTooSmall("single_electron_energy: wavefunction mass " + std::to_string(mass) +
                                 " near the boundary of " + grid.describe(),
                             2.0 * grid.half_extent());
    return gs.energy;
}

/// Retries with a wider grid (same spacing) on DomainTooSmall.
inline double single_electron_energy_auto(double Z, double B, ModelSpec const& model, Grid1D grid,
                                          double tol = 1e-12, int max_growth = 8) {
    for (int k = 0;; ++k) {
        try {
            return single_electron_energy(Z, B, model, grid, tol);
        } catch (DomainTooSmall const&) {
            if (k >= max_growth) throw;
            grid = grid.widened(2.0);
        }
    }
}

struct ScfOptions {
    int max_iterations = 400;
    int anderson_depth = 8; // 0: plain linear mixing, halved when the energy rises
    double mixing = 0.5;
    double energy_tol = 1e-11;
    double density_tol = 1e-7;
    double eigen_tol = 1e-12;

    void validate() const {
        if (max_iterations < 1) throw InvalidInput("ScfOptions: max_iterations must be >= 1");
        if (!(mixing > 0.0 && mixing <= 1.0)) throw InvalidInput("ScfOptions: mixing must lie in (0, 1]");
        if (anderson_depth < 0) throw InvalidInput("ScfOptions: anderson_depth must be >= 0");
        if (!(energy_tol > 0.0)) throw InvalidInput("ScfOptions: energy_tol must be positive");
        if (!(density_tol > 0.0)) throw InvalidInput("ScfOptions: density_tol must be positive");
    }
};

/// W(kh) for k = 0 .. n-1, the interaction on the difference grid.
inline std::vector<double> interaction_table(ModelSpec const& model, Grid1D const& grid) {
    std::vector<double> w(static_cast<std::size_t>(grid.size()));
    double const h = grid.spacing();
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = model.interaction_at(k * h);
    return w;
}

namespace detail {

/// (W * rho)(x_i) = h sum_j W(x_i - x_j) rho_j.
inline std::vector<double> convolve(std::vector<double> const& wtab, std::vector<double> const& rho, double h) {
    std::size_t const n = rho.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j <= i; ++j) s += wtab[i - j] * rho[j];
        double const* w = wtab.data() + 1;
        double const* r = rho.data() + i + 1;
        for (std::size_t k = 0; k + i + 1 < n; ++k) s += w[k] * r[k];
        out[i] = s * h;
    }
    return out;
}

inline double dot(std::vector<double> const& a, std::vector<double> const& b, double h) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s * h;
}

} // namespace detail

struct HartreeResult {
    double energy = 0.0;
    double orbital_energy = 0.0;
    int iterations = 0;
    double residual = 0.0;
    std::vector<double> orbital;
    std::vector<double> history;
};

/// Product ansatz phi^{(x)N}. The returned energy is the exact discrete expectation
///   N <phi, h_1 phi> + N(N-1)/2 <rho, W * rho>,   rho = phi^2,
/// of the final orbital, so it is a variational upper bound on the same grid.
/// Density mixing with Anderson acceleration (depth 0 is plain linear mixing).
inline HartreeResult hartree_solve(int N, double Z, double B, ModelSpec const& model, Grid1D const& grid,
                                   ScfOptions const& opts = {}) {
    if (N < 1) throw InvalidInput("hartree_energy: N must be >= 1");
    opts.validate();
    FieldParams const fp(Z, B);
    double const h = grid.spacing();
    auto const u = detail::nuclear_values(model, Z, grid);
    auto const op0 = discretize_values(grid, fp.M(), u);
    auto gs = ground_state(op0, opts.eigen_tol);
    HartreeResult res;
    if (N == 1) {
        res.energy = gs.energy;
        res.orbital_energy = gs.energy;
        res.orbital = std::move(gs.vector);
        return res;
    }
    auto const wtab = interaction_table(model, grid);
    double const pairs = 0.5 * N * (N - 1.0);
    std::size_t const n = gs.vector.size();
    Eigen::VectorXd rho_in(n);
    for (std::size_t i = 0; i < n; ++i) rho_in[i] = gs.vector[i] * gs.vector[i];

    std::vector<Eigen::VectorXd> hist_x, hist_f;
    double mixing = opts.mixing;
    double e_prev = std::numeric_limits<double>::infinity();
    std::vector<double> v(n), rin(n), rout(n);
    for (int it = 1; it <= opts.max_iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) rin[i] = rho_in[i];
        auto const field_in = detail::convolve(wtab, rin, h);
        for (std::size_t i = 0; i < n; ++i) v[i] = u[i] + (N - 1.0) * field_in[i];
        auto const op = discretize_values(grid, fp.M(), v);
        gs = ground_state(op, opts.eigen_tol);
        for (std::size_t i = 0; i < n; ++i) rout[i] = gs.vector[i] * gs.vector[i];
        auto const field_out = detail::convolve(wtab, rout, h);
        double const t_out = gs.energy - (N - 1.0) * detail::dot(rout, field_in, h);
        double const energy = N * t_out + pairs * detail::dot(rout, field_out, h);
        Eigen::VectorXd f(n);
        for (std::size_t i = 0; i < n; ++i) f[i] = rout[i] - rin[i];
        double const resid = f.lpNorm<1>() * h;
        res.history.push_back(resid);
        res.energy = energy;
        res.orbital_energy = gs.energy;
        res.iterations = it;
        res.residual = resid;
        if (resid < opts.density_tol &&
            std::abs(energy - e_prev) <= opts.energy_tol * std::max(1.0, std::abs(energy))) {
            res.orbital = std::move(gs.vector);
            return res;
        }
        if (opts.anderson_depth == 0 && energy > e_prev + 10.0 * opts.energy_tol * std::max(1.0, std::abs(energy)))
            mixing = std::max(0.5 * mixing, 1.0 / 64.0);
        e_prev = energy;

        Eigen::VectorXd next = rho_in + mixing * f;
        hist_x.push_back(rho_in);
        hist_f.push_back(f);
        if (hist_x.size() > static_cast<std::size_t>(opts.anderson_depth) + 1) {
            hist_x.erase(hist_x.begin());
            hist_f.erase(hist_f.begin());
        }
        std::size_t const k = hist_x.size() - 1;
        if (k > 0) {
            Eigen::MatrixXd dF(n, k), dX(n, k);
            for (std::size_t j = 0; j < k; ++j) {
                dF.col(j) = hist_f[k] - hist_f[j];
                dX.col(j) = hist_x[k] - hist_x[j];
            }
            Eigen::VectorXd const gamma = dF.colPivHouseholderQr().solve(f);
            next -= (dX + mixing * dF) * gamma;
        }
        // project back to densities
        next = next.cwiseMax(0.0);
        double const mass = next.sum() * h;
        if (!(mass > 0.0)) {
            next = rho_in + mixing * f;
            hist_x.clear();
            hist_f.clear();
        } else {
            next /= mass;
        }
        rho_in = std::move(next);
    }
    throw NonConvergence("hartree: no convergence after " + std::to_string(opts.max_iterations) + " iterations",
                         res.history);
}

inline double hartree_energy(int N, double Z, double B, ModelSpec const& model, Grid1D const& grid,
                             ScfOptions const& opts = {}) {
    return hartree_solve(N, Z, B, model, grid, opts).energy;
}

/// Energy in the original units: sqrt(B) e + N B (Landau offset included).
inline double full_energy(double scaled_energy, int N, double B) {
    return std::sqrt(B) * scaled_energy + N * B;
}

} // namespace landau1d
