#pragma once
// Effective electron-electron interactions in the lowest Landau band, written as
// convex combinations  W(x) = sum_j b_j (1/sqrt 2) V_j(x / sqrt 2).
//
// With sigma = (z1 + z2)/sqrt2, tau = (z1 - z2)/sqrt2, any two-particle amplitude
// z1^a z2^b expands as  2^{-(a+b)/2} sum_{nu,mu} (-1)^mu C(a,nu) C(b,mu) tau^{nu+mu} sigma^{a+b-nu-mu}.
// Angular integration kills cross terms tau^alpha conj(tau)^beta with alpha != beta,
// and the Gaussian moments give
//     b_alpha  proportional to  |P_alpha|^2 alpha! (n - alpha)!,   n = a + b,
// where P_alpha is the integer coefficient of tau^alpha sigma^{n-alpha}.
// All coefficient algebra is done in exact integers; weights are normalized by
// their exact sum and converted to double once.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "landau1d/errors.hpp"
#include "landau1d/potentials.hpp"
#include "landau1d/quadrature.hpp"

namespace landau1d {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class CoefficientOrigin { product_pair, slater_pair, determinant, custom };

inline char const* to_string(CoefficientOrigin o) {
    switch (o) {
    case CoefficientOrigin::product_pair: return "product";
    case CoefficientOrigin::slater_pair: return "slater";
    case CoefficientOrigin::determinant: return "det";
    case CoefficientOrigin::custom: return "custom";
    }
    return "?";
}

/// Nonnegative weights b_0..b_J summing to one.
struct CoefficientVector {
    std::vector<double> weights;
    CoefficientOrigin origin = CoefficientOrigin::custom;

    int max_index() const { return static_cast<int>(weights.size()) - 1; }

    /// Smallest index with a nonzero weight.
    int min_support() const {
        for (std::size_t j = 0; j < weights.size(); ++j)
            if (weights[j] != 0.0) return static_cast<int>(j);
        return -1;
    }

    double sum() const {
        double s = 0.0;
        for (double w : weights) s += w;
        return s;
    }

    void validate(double sum_tol = 1e-10) const {
        if (weights.empty()) throw InvalidInput("CoefficientVector: empty");
        for (double w : weights)
            if (!(w >= -1e-12)) throw InvalidInput("CoefficientVector: negative weight");
        if (std::abs(sum() - 1.0) > sum_tol)
            throw InvalidInput("CoefficientVector: weights do not sum to one");
    }

    static CoefficientVector single(int index) {
        CoefficientVector c;
        c.weights.assign(static_cast<std::size_t>(index) + 1, 0.0);
        c.weights[static_cast<std::size_t>(index)] = 1.0;
        return c;
    }
};

namespace detail {

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Unnormalized exact weights |P_alpha|^2 alpha! (n-alpha)! for the amplitude
/// z1^a z2^b, or for z1^a z2^b - z1^b z2^a when `antisymmetric`.
inline std::vector<BigInt> raw_pair_weights(int a, int b, bool antisymmetric) {
    int const n = a + b;
    std::vector<BigInt> w(static_cast<std::size_t>(n) + 1);
    for (int alpha = 0; alpha <= n; ++alpha) {
        BigInt p = 0;
        for (int nu = std::max(0, alpha - b); nu <= std::min(a, alpha); ++nu) {
            int const mu = alpha - nu;
            BigInt const c = binomial(a, nu) * binomial(b, mu);
            int const sign_mu = (mu % 2 == 0) ? 1 : -1;
            if (antisymmetric) {
                int const sign_nu = (nu % 2 == 0) ? 1 : -1;
                p += (sign_mu - sign_nu) * c;
            } else {
                p += sign_mu * c;
            }
        }
        w[alpha] = p * p * factorial(alpha) * factorial(n - alpha);
    }
    return w;
}

inline std::vector<BigRational> normalized(std::vector<BigInt> const& raw) {
    BigInt total = 0;
    for (auto const& v : raw) total += v;
    if (total == 0) throw InvalidInput("coefficient weights vanish identically");
    std::vector<BigRational> out;
    out.reserve(raw.size());
    for (auto const& v : raw) out.emplace_back(v, total);
    return out;
}

inline CoefficientVector to_double(std::vector<BigRational> const& exact, CoefficientOrigin origin) {
    CoefficientVector c;
    c.origin = origin;
    c.weights.reserve(exact.size());
    for (auto const& r : exact) c.weights.push_back(r == 0 ? 0.0 : r.convert_to<double>());
    return c;
}

inline std::vector<BigRational> slater_pair_exact(int j, int k) {
    if (j == k) throw InvalidInput("slater pair requires distinct indices (antisymmetric pair vanishes)");
    return normalized(raw_pair_weights(j, k, true));
}

} // namespace detail

/// Exact normalized weights of W_{m1,m2} for the simple product gamma_{m1} x gamma_{m2}.
inline std::vector<BigRational> pair_coefficients_exact(LandauIndex m1, LandauIndex m2) {
    return detail::normalized(detail::raw_pair_weights(m1, m2, false));
}

/// Exact weights for the antisymmetrized pair gamma_j ^ gamma_k.
inline std::vector<BigRational> slater_pair_coefficients_exact(LandauIndex j, LandauIndex k) {
    return detail::slater_pair_exact(j, k);
}

/// Exact weights of the Slater-determinant interaction: uniform mean of the
/// antisymmetrized pair interactions over all pairs.
inline std::vector<BigRational> det_coefficients_exact(std::span<int const> m_list) {
    if (m_list.size() < 2) throw InvalidInput("det_coefficients: need at least two Landau indices");
    for (std::size_t i = 0; i < m_list.size(); ++i) {
        if (m_list[i] < 0) throw InvalidInput("det_coefficients: negative Landau index");
        if (i > 0 && m_list[i] == m_list[i - 1])
            throw InvalidInput("det_coefficients: duplicate Landau index " + std::to_string(m_list[i]));
        if (i > 0 && m_list[i] < m_list[i - 1])
            throw InvalidInput("det_coefficients: indices must be strictly increasing");
    }
    std::size_t const n = m_list.size();
    int const top = m_list[n - 2] + m_list[n - 1];
    std::vector<BigRational> acc(static_cast<std::size_t>(top) + 1, BigRational(0));
    BigInt const pairs = BigInt(n) * BigInt(n - 1) / 2;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            auto const w = detail::slater_pair_exact(m_list[a], m_list[b]);
            for (std::size_t i = 0; i < w.size(); ++i) acc[i] += w[i] / BigRational(pairs);
        }
    }
    return acc;
}

inline CoefficientVector pair_coefficients(LandauIndex m1, LandauIndex m2) {
    return detail::to_double(pair_coefficients_exact(m1, m2), CoefficientOrigin::product_pair);
}

/// Odd indices only.
inline CoefficientVector slater_pair_coefficients(LandauIndex j, LandauIndex k) {
    return detail::to_double(slater_pair_coefficients_exact(j, k), CoefficientOrigin::slater_pair);
}

inline CoefficientVector det_coefficients(std::span<int const> m_list) {
    return detail::to_double(det_coefficients_exact(m_list), CoefficientOrigin::determinant);
}

inline std::vector<int> canonical_slater_indices(int N) {
    std::vector<int> m(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) m[i] = i;
    return m;
}

/// sum_j b_j (1/sqrt2) V_j(x/sqrt2).
inline double eval_w(CoefficientVector const& coeffs, double x, QuadratureSpec const& quad = {}) {
    if (coeffs.weights.empty()) throw InvalidInput("eval_w: empty coefficient vector");
    double const y = x / std::numbers::sqrt2;
    auto const v = eval_vm_range(coeffs.max_index(), y, quad);
    double s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (coeffs.weights[j] != 0.0) s += coeffs.weights[j] * v[j];
    return s / std::numbers::sqrt2;
}

/// (1/sqrt2) V_j(x/sqrt2), the building block of every pair interaction.
inline double scaled_vm(LandauIndex j, double x, QuadratureSpec const& quad = {}) {
    return eval_vm(j, x / std::numbers::sqrt2, quad) / std::numbers::sqrt2;
}

namespace detail {

// Brute-force quadrature of
//   norm * \int du e^{-u} \int dv e^{-v} \int_0^{2pi} dtheta F(u, v, theta) / sqrt(x^2 + 2v)
// where the caller's F is the squared two-particle amplitude evaluated at
// sigma = sqrt(u), tau = sqrt(v) e^{i theta}. The v integral is taken in
// r = sqrt(x^2 + 2v), which removes the 1/sqrt factor and leaves a smooth
// Gaussian-tailed integrand; Gauss-Legendre panels in r, Laguerre in u
// (the theta-averaged integrand is a polynomial in u), trapezoid in theta.
template <class Amplitude>
double oracle_quadrature(Amplitude&& amplitude_sq, int degree, double norm, double x,
                         QuadratureSpec const& quad) {
    double const ax = std::abs(x);
    int const n_theta = 8 * (degree + 1);
    Rule const lag = gauss_laguerre(degree + 2, 0.0);
    Rule const leg = gauss_legendre(16);
    double const v_max = degree + 60.0 + 12.0 * std::sqrt(degree + 1.0);
    double const r_lo = ax;
    double const r_hi = std::sqrt(ax * ax + 2.0 * v_max);

    auto inner = [&](double v, int nth) {
        double const t = std::sqrt(v);
        double g = 0.0;
        for (std::size_t iu = 0; iu < lag.nodes.size(); ++iu) {
            double const s = std::sqrt(lag.nodes[iu]);
            double acc = 0.0;
            for (int it = 0; it < nth; ++it) {
                double const theta = 2.0 * std::numbers::pi * it / nth;
                std::complex<double> const sigma(s, 0.0);
                std::complex<double> const tau = std::polar(t, theta);
                std::complex<double> const z1 = (sigma + tau) / std::numbers::sqrt2;
                std::complex<double> const z2 = (sigma - tau) / std::numbers::sqrt2;
                acc += amplitude_sq(z1, z2);
            }
            g += lag.weights[iu] * acc * (2.0 * std::numbers::pi / nth);
        }
        return g;
    };

    // theta resolution check at a representative v
    {
        double const v_probe = 0.5 * (degree + 1.0);
        double const a = inner(v_probe, n_theta);
        double const b = inner(v_probe, 2 * n_theta);
        if (std::abs(a - b) > 1e-10 * std::abs(b) + 1e-300)
            throw AccuracyError("oracle: theta rule not converged", b, std::abs(a - b));
    }

    auto integrate = [&](int panels) {
        double total = 0.0;
        double const width = (r_hi - r_lo) / panels;
        for (int p = 0; p < panels; ++p) {
            double const a = r_lo + p * width;
            for (std::size_t i = 0; i < leg.nodes.size(); ++i) {
                double const r = a + 0.5 * width * (leg.nodes[i] + 1.0);
                double const v = std::max(0.0, 0.5 * (r * r - ax * ax));
                total += 0.5 * width * leg.weights[i] * std::exp(-v) * inner(v, n_theta);
            }
        }
        return norm * total;
    };

    int panels = 8;
    double prev = integrate(panels);
    double err = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(quad.max_refinements, 4); ++r) {
        panels *= 2;
        double const cur = integrate(panels);
        err = std::abs(cur - prev);
        if (err <= std::max(1e-14, 1e-11 * std::abs(cur))) return cur;
        prev = cur;
    }
    throw AccuracyError("oracle: radial rule not converged", prev, err);
}

inline double factorial_d(int n) { return std::tgamma(n + 1.0); }

} // namespace detail

/// Independent triple-quadrature value of W_{m1,m2}(x) from the Landau-state integrand.
inline double oracle_w_direct(LandauIndex m1, LandauIndex m2, double x, QuadratureSpec const& quad = {}) {
    int const a = m1, b = m2;
    if (a > 8 || b > 8) throw InvalidInput("oracle_w_direct: indices above 8 are out of desk scale");
    auto amp = [a, b](std::complex<double> z1, std::complex<double> z2) {
        return std::pow(std::norm(z1), a) * std::pow(std::norm(z2), b);
    };
    double const norm = 1.0 / (2.0 * std::numbers::pi * detail::factorial_d(a) * detail::factorial_d(b));
    return detail::oracle_quadrature(amp, a + b, norm, x, quad);
}

/// Independent triple-quadrature value of the antisymmetrized pair interaction.
inline double oracle_w_slater_pair(LandauIndex j, LandauIndex k, double x, QuadratureSpec const& quad = {}) {
    int const a = j, b = k;
    if (a == b) throw InvalidInput("oracle_w_slater_pair: indices must differ");
    if (a > 8 || b > 8) throw InvalidInput("oracle_w_slater_pair: indices above 8 are out of desk scale");
    auto amp = [a, b](std::complex<double> z1, std::complex<double> z2) {
        std::complex<double> const d = std::pow(z1, a) * std::pow(z2, b) - std::pow(z1, b) * std::pow(z2, a);
        return std::norm(d);
    };
    double const norm = 1.0 / (4.0 * std::numbers::pi * detail::factorial_d(a) * detail::factorial_d(b));
    return detail::oracle_quadrature(amp, a + b, norm, x, quad);
}

} // namespace landau1d
