#pragma once
// Binding tests E(N) < E(N-1) and maximum-ionization scans.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "landau1d/spectral.hpp"
#include "landau1d/two_electron.hpp"

namespace landau1d {

enum class Solver { hartree, exact2 };

inline char const* to_string(Solver s) { return s == Solver::hartree ? "hartree" : "exact2"; }

inline Solver parse_solver(std::string const& s) {
    if (s == "hartree") return Solver::hartree;
    if (s == "exact2") return Solver::exact2;
    throw InvalidInput("unknown solver '" + s + "' (expected hartree or exact2)");
}

struct BindingOptions {
    ScfOptions scf;
    TwoElectronOptions exact2;
    double eigen_tol = 1e-12;
    double binding_rel_tol = 1e-8;           // binding_tol = rel * |E(N-1)| unless absolute given
    std::optional<double> binding_abs_tol;
};

struct BindingResult {
    bool bound = false;
    double eN = 0.0;
    double eNm1 = 0.0;
};

struct SolveInfo {
    double energy = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

/// Ground energy of N electrons in the scaled units (E(0) = 0).
inline SolveInfo solve_energy(int N, double Z, double B, ModelSpec const& model, Grid1D const& grid, Solver solver,
                              BindingOptions const& opts = {}) {
    if (N < 0) throw InvalidInput("N must be nonnegative");
    if (N == 0) return {};
    if (solver == Solver::exact2) {
        if (N > 2) throw InvalidInput("exact2 solver supports N <= 2 only");
        if (N == 1) {
            FieldParams const fp(Z, B);
            auto const op = discretize_values(grid, fp.M(), detail::nuclear_values(model, Z, grid));
            return {ground_state(op, opts.eigen_tol).energy, 1, 0.0};
        }
        auto const r = exact_two_electron_solve(Z, B, model, grid, opts.exact2);
        return {r.energy, r.iterations, r.residual};
    }
    auto const r = hartree_solve(N, Z, B, model, grid, opts.scf);
    return {r.energy, r.iterations, r.residual};
}

inline double binding_tolerance(double eNm1, BindingOptions const& opts) {
    return opts.binding_abs_tol ? *opts.binding_abs_tol : opts.binding_rel_tol * std::abs(eNm1);
}

inline BindingResult binding_test(int N, double Z, double B, ModelSpec const& model, Grid1D const& grid,
                                  Solver solver, BindingOptions const& opts = {}) {
    if (N < 1) throw InvalidInput("binding_test: N must be >= 1");
    if (solver == Solver::exact2 && N > 2) throw InvalidInput("binding_test: exact2 requires N <= 2");
    BindingResult r;
    r.eN = solve_energy(N, Z, B, model, grid, solver, opts).energy;
    r.eNm1 = solve_energy(N - 1, Z, B, model, grid, solver, opts).energy;
    r.bound = r.eN < r.eNm1 - binding_tolerance(r.eNm1, opts);
    return r;
}

struct ScanRow {
    int N = 0;
    double energy = std::nan("");
    bool bound = false;
    int iterations = 0;
    double residual = std::nan("");
    std::string error;
};

struct ScanResult {
    int n_max = 0;
    bool truncated = false; // still binding at the cap
    std::vector<ScanRow> rows;
};

/// Model used for the N-electron problem. Most models do not depend on N; the
/// Slater model does (its transverse factor is gamma_0 ^ ... ^ gamma_{N-1}).
using ModelFamily = std::function<ModelSpec(int N)>;

inline ModelFamily fixed_model(ModelSpec model) {
    return [model = std::move(model)](int) { return model; };
}

/// One electron in gamma_0 is the 0-model with N = 1.
inline ModelFamily slater_family() {
    return [](int N) { return N < 2 ? make_m_model(0) : make_slater_model(N); };
}

/// Sweep N = 1, 2, ...; stops after the first N that does not bind.
/// Solver failures are recorded per row and the scan moves on.
inline ScanResult nmax_scan(double Z, double B, ModelFamily const& family, int cap, Grid1D const& grid,
                            Solver solver = Solver::hartree, BindingOptions const& opts = {}) {
    if (cap < 1) throw InvalidInput("nmax_scan: cap must be >= 1");
    ScanResult out;
    std::optional<double> prev = 0.0;
    for (int N = 1; N <= cap; ++N) {
        ScanRow row;
        row.N = N;
        try {
            if (solver == Solver::exact2 && N > 2) throw InvalidInput("exact2 solver supports N <= 2 only");
            auto const info = solve_energy(N, Z, B, family(N), grid, solver, opts);
            row.energy = info.energy;
            row.iterations = info.iterations;
            row.residual = info.residual;
            if (!prev) throw Error("previous energy unavailable");
            row.bound = info.energy < *prev - binding_tolerance(*prev, opts);
            prev = info.energy;
        } catch (Error const& e) {
            row.error = e.what();
            if (std::isnan(row.energy)) prev.reset();
            else prev = row.energy;
        }
        out.rows.push_back(row);
        if (row.error.empty()) {
            if (!row.bound) return out;
            out.n_max = N;
        }
    }
    out.truncated = !out.rows.empty() && out.rows.back().bound;
    return out;
}

inline ScanResult nmax_scan(double Z, double B, ModelSpec const& model, int cap, Grid1D const& grid,
                            Solver solver = Solver::hartree, BindingOptions const& opts = {}) {
    return nmax_scan(Z, B, fixed_model(model), cap, grid, solver, opts);
}

} // namespace landau1d
