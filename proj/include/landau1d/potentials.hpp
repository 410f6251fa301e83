#pragma once
// Regularized Coulomb potentials of the lowest Landau band.
//
//   V_m(x) = (1/m!) \int_0^inf u^m e^{-u} / sqrt(x^2 + u) du      (B = 1)
//   V_m^B(x) = sqrt(B) V_m(sqrt(B) x)
//
// Evaluation dispatches on (m, |x|):
//   m = 0, x^2 <= asymptotic_factor      sqrt(pi) e^{x^2} erfc(|x|)
//   x^2 > asymptotic_factor (m + 1)      1/|x| series in (m+1)/x^2
//   |x| < recurrence_x_max               upward three-term recurrence from V_0, V_1
//   otherwise                            Gauss-Laguerre with weight u^m e^{-u}
//
// The recurrence  m V_m = (m - 1/2 - x^2) V_{m-1} + x^2 V_{m-2},
// V_1 = |x| + (1/2 - x^2) V_0, follows from integrating the shifted
// representation (2/m!) e^{x^2} \int_{|x|}^inf (t^2 - x^2)^m e^{-t^2} dt by parts.
// It is stable for |x| <= 2 at every m we use; Laguerre converges slowly there
// because of the branch point at u = -x^2.

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "landau1d/errors.hpp"
#include "landau1d/grid.hpp"
#include "landau1d/quadrature.hpp"

namespace landau1d {

/// Angular-momentum label of a Landau state.
class LandauIndex {
public:
    LandauIndex(int m) : m_(m) { // NOLINT(google-explicit-constructor)
        if (m < 0) throw InvalidInput("Landau index must be nonnegative, got " + std::to_string(m));
    }
    int value() const { return m_; }
    operator int() const { return m_; } // NOLINT(google-explicit-constructor)

private:
    int m_;
};

struct QuadratureSpec {
    int node_count = 32;
    double rel_tol = 1e-13;
    double abs_tol = 1e-16;
    int max_refinements = 6;
    // regime switches
    double asymptotic_factor = 100.0;
    double recurrence_x_max = 2.0;

    void validate() const {
        if (node_count < 2) throw InvalidInput("QuadratureSpec: node_count must be >= 2");
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw InvalidInput("QuadratureSpec: tolerances must be positive");
        if (max_refinements < 0) throw InvalidInput("QuadratureSpec: max_refinements must be >= 0");
    }
};

struct FieldParams {
    double Z;
    double B;

    FieldParams(double z, double b) : Z(z), B(b) {
        if (!(z > 0.0)) throw InvalidInput("FieldParams: Z must be positive");
        if (!(b > 0.0)) throw InvalidInput("FieldParams: B must be positive");
    }
    /// Effective mass after scaling out the field.
    double M() const { return 1.0 / std::sqrt(B); }
};

namespace detail {

inline double vm_closed_m0(double ax) {
    return std::sqrt(std::numbers::pi) * std::exp(ax * ax) * std::erfc(ax);
}

/// 1/|x| series; nullopt if the terms stop decreasing before convergence.
inline std::optional<double> vm_asymptotic(int m, double ax) {
    double const inv_x2 = 1.0 / (ax * ax);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 400; ++k) {
        double const next = term * (-(2.0 * k - 1.0) / (2.0 * k)) * (m + k) * inv_x2;
        if (std::abs(next) >= std::abs(term)) return std::nullopt;
        term = next;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) return sum / ax;
    }
    return std::nullopt;
}

/// V_0 .. V_top at one abscissa by upward recurrence.
inline std::vector<double> vm_recurrence(int top, double ax) {
    std::vector<double> v(static_cast<std::size_t>(top) + 1);
    double const y = ax * ax;
    v[0] = vm_closed_m0(ax);
    if (top >= 1) v[1] = ax + (0.5 - y) * v[0];
    for (int m = 2; m <= top; ++m) v[m] = ((m - 0.5 - y) * v[m - 1] + y * v[m - 2]) / m;
    return v;
}

inline double vm_laguerre(int m, double ax, QuadratureSpec const& quad) {
    double const y = ax * ax;
    auto integrate = [&](int n) {
        Rule const& rule = cached_gauss_laguerre(n, static_cast<double>(m));
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            s += rule.weights[i] / std::sqrt(y + rule.nodes[i]);
        return s;
    };
    int n = quad.node_count;
    double prev = integrate(n);
    double err = std::numeric_limits<double>::infinity();
    for (int r = 0; r < quad.max_refinements; ++r) {
        n *= 2;
        double const cur = integrate(n);
        err = std::abs(cur - prev);
        if (err <= std::max(quad.abs_tol, quad.rel_tol * std::abs(cur))) return cur;
        prev = cur;
    }
    throw AccuracyError("eval_vm: tolerance not reached for m=" + std::to_string(m) +
                            ", x=" + std::to_string(ax),
                        prev, err);
}

} // namespace detail

/// V_m(x) for B = 1. Even in x.
inline double eval_vm(LandauIndex m_index, double x, QuadratureSpec const& quad = {}) {
    quad.validate();
    if (!std::isfinite(x)) throw InvalidInput("eval_vm: x must be finite");
    int const m = m_index.value();
    double const ax = std::abs(x);
    double const y = ax * ax;
    bool const far = y > quad.asymptotic_factor * (m + 1);
    if (m == 0 && !far) return detail::vm_closed_m0(ax);
    if (far) {
        if (auto v = detail::vm_asymptotic(m, ax)) return *v;
    }
    if (ax < quad.recurrence_x_max) return detail::vm_recurrence(m, ax)[static_cast<std::size_t>(m)];
    return detail::vm_laguerre(m, ax, quad);
}

/// V_0(x) .. V_top(x) at one point; identical values to calling eval_vm per index.
inline std::vector<double> eval_vm_range(int top, double x, QuadratureSpec const& quad = {}) {
    if (top < 0) return {};
    double const ax = std::abs(x);
    if (ax < quad.recurrence_x_max) {
        quad.validate();
        return detail::vm_recurrence(top, ax);
    }
    std::vector<double> v(static_cast<std::size_t>(top) + 1);
    for (int m = 0; m <= top; ++m) v[m] = eval_vm(m, x, quad);
    return v;
}

/// V_m^B(x) = sqrt(B) V_m(sqrt(B) x).
inline double eval_vm_field(LandauIndex m, double B, double x, QuadratureSpec const& quad = {}) {
    if (!(B > 0.0)) throw InvalidInput("eval_vm_field: B must be positive");
    double const sb = std::sqrt(B);
    return sb * eval_vm(m, sb * x, quad);
}

/// Slater-model nuclear potential: mean of V_0 .. V_{N-1}.
inline double eval_vav(int N, double x, QuadratureSpec const& quad = {}) {
    if (N < 1) throw InvalidInput("eval_vav: N must be >= 1");
    auto const v = eval_vm_range(N - 1, x, quad);
    double s = 0.0;
    for (double a : v) s += a;
    return s / N;
}

/// Optional diagnostic: 2 V_N(x) - (2x^2/N)(1/x - V_{N-1}(x)). Only an approximation
/// of the mean potential; not used by any bound.
inline double vav_refined_estimate(int N, double x, QuadratureSpec const& quad = {}) {
    if (N < 1) throw InvalidInput("vav_refined_estimate: N must be >= 1");
    double const ax = std::abs(x);
    if (ax == 0.0) return 2.0 * eval_vm(N, 0.0, quad);
    return 2.0 * eval_vm(N, ax, quad) - (2.0 * ax * ax / N) * (1.0 / ax - eval_vm(N - 1, ax, quad));
}

/// Bracket 1/sqrt(x^2+m+1) < V_m(x) < 1/sqrt(x^2+m). `upper` is empty where it
/// diverges (m = 0, x = 0).
struct Envelope {
    double lower;
    std::optional<double> upper;

    bool contains_strictly(double v) const { return v > lower && (!upper || v < *upper); }
};

inline Envelope vm_envelope(LandauIndex m_index, double x) {
    int const m = m_index.value();
    double const y = x * x;
    Envelope env{1.0 / std::sqrt(y + m + 1.0), std::nullopt};
    if (y + m > 0.0) env.upper = 1.0 / std::sqrt(y + m);
    return env;
}

struct VmTable {
    std::vector<int> m;
    std::vector<double> x;
    std::vector<std::vector<double>> values; // values[row for m][column for x]
};

inline VmTable vm_table(std::span<int const> m_list, std::span<double const> xs,
                        QuadratureSpec const& quad = {}) {
    if (xs.empty()) throw InvalidInput("vm_table: grid must be nonempty");
    VmTable table;
    table.m.assign(m_list.begin(), m_list.end());
    table.x.assign(xs.begin(), xs.end());
    for (int m : m_list) {
        std::vector<double> row;
        row.reserve(xs.size());
        for (double x : xs) row.push_back(eval_vm(m, x, quad));
        table.values.push_back(std::move(row));
    }
    return table;
}

inline VmTable vm_table(std::span<int const> m_list, Grid1D const& grid,
                        QuadratureSpec const& quad = {}) {
    auto const xs = grid.nodes();
    return vm_table(m_list, std::span<double const>(xs), quad);
}

} // namespace landau1d
