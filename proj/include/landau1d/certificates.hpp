#pragma once
// Numeric form of the localization argument: a partition of unity on R^N,
// the inner-ball margin, the outer function T(x), and the closed-form
// electron-count thresholds.
//
// Partition. With R = ||x||_inf, u = clamp((R/rho - 1)/delta, 0, 1):
//     G_0 = cos(pi u / 2),     G_k = sin(pi u / 2) q_k / ||q||_2,
//     q_k = max((|x_k|/R)^kappa - (1+delta)^{-kappa}, 0),
//     kappa = 6 max(log N, 1) / log(1 + delta).
// The angular weights resolve coordinates within a factor (1+delta) of the
// maximum; their gradient carries kappa ~ log N / delta, which is where the
// (log N)^2 / delta^2 law comes from.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "landau1d/errors.hpp"
#include "landau1d/models.hpp"

namespace landau1d {

struct PartitionSpec {
    int N = 1;
    double rho = 1.0;
    double delta = 1.0;
    std::optional<double> lambda_estimate;
};

class Partition {
public:
    Partition(int N, double rho, double delta) : spec_{N, rho, delta, std::nullopt} {
        if (N < 1) throw InvalidInput("build_partition: N must be >= 1");
        if (!(rho > 0.0)) throw InvalidInput("build_partition: rho must be positive");
        if (!(delta > 0.0)) throw InvalidInput("build_partition: delta must be positive");
        kappa_ = 6.0 * std::max(std::log(double(N)), 1.0) / std::log1p(delta);
        floor_ = std::exp(-kappa_ * std::log1p(delta));
    }

    PartitionSpec const& spec() const { return spec_; }
    int dimension() const { return spec_.N; }
    double kappa() const { return kappa_; }

    /// G_0 .. G_N at x (length N).
    std::vector<double> values(std::span<double const> x) const {
        std::size_t const n = static_cast<std::size_t>(spec_.N);
        if (x.size() != n) throw InvalidInput("partition: point has wrong dimension");
        std::vector<double> g(n + 1, 0.0);
        double R = 0.0;
        for (double v : x) R = std::max(R, std::abs(v));
        double const u = std::clamp((R / spec_.rho - 1.0) / spec_.delta, 0.0, 1.0);
        double const theta = 0.5 * std::numbers::pi * u;
        g[0] = u >= 1.0 ? 0.0 : std::cos(theta);
        if (u <= 0.0) return g;
        double const s = u >= 1.0 ? 1.0 : std::sin(theta);
        double norm2 = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            double const r = std::abs(x[k]) / R;
            double const q = r > 0.0 ? std::max(std::exp(kappa_ * std::log(r)) - floor_, 0.0) : 0.0;
            g[k + 1] = q;
            norm2 += q * q;
        }
        double const scale = s / std::sqrt(norm2);
        for (std::size_t k = 1; k <= n; ++k) g[k] *= scale;
        return g;
    }

    double value(std::span<double const> x, int index) const {
        if (index < 0 || index > spec_.N) throw InvalidInput("partition: index out of range");
        return values(x)[static_cast<std::size_t>(index)];
    }

    /// sum_nu |grad G_nu|^2 by central differences with step h.
    double gradient_sq(std::span<double const> x, double h) const {
        std::vector<double> y(x.begin(), x.end());
        double total = 0.0;
        for (std::size_t j = 0; j < y.size(); ++j) {
            double const keep = y[j];
            y[j] = keep + h;
            auto const gp = values(y);
            y[j] = keep - h;
            auto const gm = values(y);
            y[j] = keep;
            for (std::size_t k = 0; k < gp.size(); ++k) {
                double const d = (gp[k] - gm[k]) / (2.0 * h);
                total += d * d;
            }
        }
        return total;
    }

private:
    PartitionSpec spec_;
    double kappa_;
    double floor_;
};

inline Partition build_partition(int N, double rho, double delta) { return Partition(N, rho, delta); }

struct PartitionCheckRow {
    int N = 0;
    double lambda = 0.0;        // sup of the scaled gradient sum
    double raw_sup = 0.0;       // lambda (log N)^2
    double max_sum_error = 0.0; // max |sum G^2 - 1|
    int interior_samples = 0;
};

struct PartitionCheckResult {
    std::vector<PartitionCheckRow> rows;
    double lambda = 0.0;           // max over rows
    double spread = 0.0;           // max lambda / min lambda
    double log_log_slope = 0.0;    // fit of log raw_sup against log log N
};

namespace detail {

/// Points concentrated where the partition varies: R across the transition
/// annulus and beyond, a random number of coordinates inside the angular band.
inline std::vector<double> sample_partition_point(std::mt19937_64& rng, int N, double rho, double delta) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double const R = rho * (0.5 + U(rng) * (2.5 * (1.0 + delta) - 0.5));
    std::uniform_int_distribution<int> pick_k(1, N);
    int const active = pick_k(rng);
    std::vector<int> order(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<double> x(static_cast<std::size_t>(N));
    double const edge = 1.0 / (1.0 + delta);
    for (int i = 0; i < N; ++i) {
        double r;
        if (i == 0) r = 1.0;
        else if (i < active) r = edge + (1.0 - edge) * U(rng);
        else r = edge * U(rng);
        double const sign = U(rng) < 0.5 ? -1.0 : 1.0;
        x[static_cast<std::size_t>(order[i])] = sign * R * r;
    }
    return x;
}

} // namespace detail

/// Empirical lambda: sup over samples of
///   sum|grad G|^2 delta^2 rho^2 / (log N)^2        on supp G_0,
///   sum|grad G|^2 delta^2 rho |x_k| / (log N)^2    on supp G_k (largest such |x_k|).
inline PartitionCheckResult partition_check(std::span<int const> N_list, double delta, int sample_count,
                                            std::uint64_t seed = 1, double rho = 1.0) {
    if (sample_count < 1000) throw InvalidInput("partition_check: sample_count must be >= 1000");
    if (N_list.empty()) throw InvalidInput("partition_check: empty N list");
    PartitionCheckResult out;
    std::mt19937_64 rng(seed);
    for (int N : N_list) {
        if (N < 2) throw InvalidInput("partition_check: N must be >= 2 ((log N)^2 scaling)");
        Partition const part(N, rho, delta);
        double const logn2 = std::pow(std::log(double(N)), 2);
        double const h = 1e-7 * rho;
        PartitionCheckRow row;
        row.N = N;
        for (int s = 0; s < sample_count; ++s) {
            auto const x = detail::sample_partition_point(rng, N, rho, delta);
            auto const g = part.values(x);
            double sum = 0.0;
            for (double v : g) sum += v * v;
            row.max_sum_error = std::max(row.max_sum_error, std::abs(sum - 1.0));
            double const grad = part.gradient_sq(x, h);
            double R = 0.0;
            for (double v : x) R = std::max(R, std::abs(v));
            bool counted = false;
            if (g[0] > 0.0 && R <= (1.0 + delta) * rho) {
                row.lambda = std::max(row.lambda, grad * delta * delta * rho * rho / logn2);
                counted = true;
            }
            double xk = 0.0;
            for (int k = 1; k <= N; ++k)
                if (g[k] > 0.0) xk = std::max(xk, std::abs(x[k - 1]));
            if (xk > 0.0) {
                row.lambda = std::max(row.lambda, grad * delta * delta * rho * xk / logn2);
                counted = true;
            }
            if (counted) ++row.interior_samples;
        }
        if (row.interior_samples == 0) throw SamplingError("partition_check: no samples inside any support");
        row.raw_sup = row.lambda * logn2;
        out.rows.push_back(row);
    }
    double lo = out.rows.front().lambda, hi = lo;
    for (auto const& r : out.rows) {
        lo = std::min(lo, r.lambda);
        hi = std::max(hi, r.lambda);
    }
    out.lambda = hi;
    out.spread = hi / lo;
    if (out.rows.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        double const m = static_cast<double>(out.rows.size());
        for (auto const& r : out.rows) {
            double const a = std::log(std::log(double(r.N)));
            double const b = std::log(r.raw_sup);
            sx += a;
            sy += b;
            sxx += a * a;
            sxy += a * b;
        }
        out.log_log_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    }
    return out;
}

struct BoundParams {
    double alpha = 0.5;
    double epsilon = 0.1;
    double A = 1.0;
    double a1 = 1e12;
    double a2 = 1.0;
    double C_ahs = 0.25;
    double lambda = 40.0;
    double c_rho = 0.5;
    double omega = 0.1;
    double delta = 1.0;
    int outer_points = 512;

    void validate() const {
        for (double v : {alpha, epsilon, A, a1, a2, C_ahs, lambda, c_rho, omega, delta})
            if (!(v > 0.0) || !std::isfinite(v)) throw InvalidInput("BoundParams: all constants must be positive");
        if (outer_points < 2) throw InvalidInput("BoundParams: outer_points must be >= 2");
    }
};

inline BoundParams bound_params_from_json(nlohmann::json const& j, BoundParams p = {}) {
    try {
        p.alpha = j.value("alpha", p.alpha);
        p.epsilon = j.value("epsilon", p.epsilon);
        p.A = j.value("A", p.A);
        p.a1 = j.value("a1", p.a1);
        p.a2 = j.value("a2", p.a2);
        p.C_ahs = j.value("C_ahs", p.C_ahs);
        p.lambda = j.value("lambda", p.lambda);
        p.c_rho = j.value("c_rho", p.c_rho);
        p.omega = j.value("omega", p.omega);
        p.delta = j.value("delta", p.delta);
        p.outer_points = j.value("outer_points", p.outer_points);
    } catch (nlohmann::json::exception const& e) {
        throw InvalidInput(std::string("params: ") + e.what());
    }
    p.validate();
    return p;
}

inline nlohmann::json to_json(BoundParams const& p) {
    return {{"alpha", p.alpha}, {"epsilon", p.epsilon}, {"A", p.A},         {"a1", p.a1},
            {"a2", p.a2},       {"C_ahs", p.C_ahs},     {"lambda", p.lambda}, {"c_rho", p.c_rho},
            {"omega", p.omega}, {"delta", p.delta},     {"outer_points", p.outer_points}};
}

inline BoundParams load_bound_params(std::string const& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("params: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (nlohmann::json::exception const& e) {
        throw InvalidInput("params: " + path + ": " + e.what());
    }
    return bound_params_from_json(j);
}

namespace detail {

inline double log_ratio(double Z, double B) {
    double const L = std::log(Z * Z / B);
    if (std::abs(L) < 1e-6) throw NearSingular("log(Z^2/B) vanishes: B is too close to Z^2");
    return L;
}

} // namespace detail

/// rho = c (1/(1+delta)) N sqrt(B) / (Z^2 log(Z^2/B)^2).
inline double rho_star(int N, double Z, double B, double delta, double c_rho) {
    if (N < 1 || !(Z > 0.0) || !(B > 0.0) || !(delta > 0.0) || !(c_rho > 0.0))
        throw InvalidInput("rho_star: arguments must be positive");
    double const L = detail::log_ratio(Z, B);
    return c_rho * N * std::sqrt(B) / ((1.0 + delta) * Z * Z * L * L);
}

/// -C N (Z^2/sqrt B) log^2 + N^2 / (2 sqrt(4(1+delta)^2 rho^2 + 2 nu)) - lambda sqrt(B) (log N)^2 / (delta^2 rho^2)
inline double inner_ball_margin(int N, double Z, double B, double delta, double rho, int nu, double lambda,
                                double C_ahs) {
    if (N < 1 || !(Z > 0.0) || !(B > 0.0) || !(delta > 0.0) || !(rho > 0.0) || nu < 0)
        throw InvalidInput("inner_ball_margin: arguments must be positive");
    double const L = detail::log_ratio(Z, B);
    double const n = N;
    double const core = -C_ahs * n * (Z * Z / std::sqrt(B)) * L * L;
    double const repulsion = n * n / (2.0 * std::sqrt(4.0 * (1.0 + delta) * (1.0 + delta) * rho * rho + 2.0 * nu));
    double const loc = lambda == 0.0 ? 0.0 : lambda * std::sqrt(B) * std::pow(std::log(n), 2) / (delta * delta * rho * rho);
    return core + repulsion - loc;
}

/// -Z_eff sqrt(((1+d/2)^2 x^2 + nu/2)/(x^2 + mu)) + (N-1)/2 - lambda sqrt(B) (log N)^2/(delta^2 rho) sqrt((1+d/2)^2 + nu/(2x^2))
inline double outer_T(double x, int N, double Z_eff, double B, double delta, double rho, int mu, int nu,
                      double lambda) {
    if (x == 0.0) throw InvalidInput("outer_T: x must be nonzero");
    double const x2 = x * x;
    double const a = 1.0 + 0.5 * delta;
    double const attraction = Z_eff * std::sqrt((a * a * x2 + 0.5 * nu) / (x2 + mu));
    double const loc = lambda == 0.0 ? 0.0
                                     : lambda * std::sqrt(B) * std::pow(std::log(double(N)), 2) / (delta * delta * rho) *
                                           std::sqrt(a * a + nu / (2.0 * x2));
    return -attraction + 0.5 * (N - 1.0) - loc;
}

/// x -> infinity limit of outer_T.
inline double outer_T_limit(int N, double Z_eff, double B, double delta, double rho, double lambda) {
    double const a = 1.0 + 0.5 * delta;
    double const loc =
        lambda == 0.0 ? 0.0 : lambda * std::sqrt(B) * std::pow(std::log(double(N)), 2) / (delta * delta * rho) * a;
    return -Z_eff * a + 0.5 * (N - 1.0) - loc;
}

struct ConditionFlag {
    std::string name;
    bool pass = false;
    double margin = 0.0;
};

struct CertificateReport {
    bool verdict = false;
    double rho = 0.0;
    double inner_margin = 0.0;
    double outer_min_T = 0.0;
    double outer_argmin = 0.0;
    std::vector<ConditionFlag> condition_flags;
};

/// gamma_nu: 2 + eps for nu = O(1) (nu <= 8), 3 + eps for nu = O(N); the
/// Slater model always counts as nu = O(N).
inline double gamma_nu(ModelSpec const& model, double epsilon) {
    bool const grows = model.kind == ModelKind::slater || model.nu > 8;
    return (grows ? 3.0 : 2.0) + epsilon;
}

inline CertificateReport no_binding_certificate(int N, double Z, double B, ModelSpec const& model,
                                                BoundParams const& params) {
    params.validate();
    if (N < 1) throw InvalidInput("no_binding_certificate: N must be >= 1");
    if (!(Z > 0.0) || !(B > 0.0)) throw InvalidInput("no_binding_certificate: Z and B must be positive");
    double const Z_eff = Z * model.charge_multiplier;
    double const delta = params.delta;
    CertificateReport rep;

    rep.condition_flags.push_back({"nu_le_2mu", model.satisfies_nu_le_2mu(), 2.0 * model.mu - model.nu});

    double const lower = params.a2 * std::pow(Z, gamma_nu(model, params.epsilon));
    double const log_upper = std::log(params.a1) + std::pow(Z, params.alpha / 4.0);
    rep.condition_flags.push_back({"field_lower", B >= lower, std::log(B) - std::log(lower)});
    rep.condition_flags.push_back({"field_upper", std::log(B) < log_upper, log_upper - std::log(B)});

    rep.rho = rho_star(N, Z_eff, B, delta, params.c_rho);
    rep.inner_margin = inner_ball_margin(N, Z_eff, B, delta, rep.rho, model.nu, params.lambda, params.C_ahs);
    rep.condition_flags.push_back({"inner_ball", rep.inner_margin > 0.0, rep.inner_margin});

    double const x_lo = rep.rho;
    double const x_hi = std::max(1e6, 1e3 * rep.rho);
    double best = std::numeric_limits<double>::infinity();
    int const P = params.outer_points;
    for (int i = 0; i < P; ++i) {
        double const x = x_lo * std::pow(x_hi / x_lo, double(i) / (P - 1));
        double const t = outer_T(x, N, Z_eff, B, delta, rep.rho, model.mu, model.nu, params.lambda);
        if (t < best) {
            best = t;
            rep.outer_argmin = x;
        }
    }
    double const tail = outer_T_limit(N, Z_eff, B, delta, rep.rho, params.lambda);
    if (tail < best) {
        best = tail;
        rep.outer_argmin = std::numeric_limits<double>::infinity();
    }
    rep.outer_min_T = best;
    rep.condition_flags.push_back({"outer_T", best > 0.0, best});

    rep.verdict = true;
    for (auto const& f : rep.condition_flags) rep.verdict = rep.verdict && f.pass;
    rep.verdict = rep.verdict && rep.inner_margin > 0.0 && rep.outer_min_T > 0.0;
    return rep;
}

inline nlohmann::json to_json(CertificateReport const& r) {
    nlohmann::json flags = nlohmann::json::array();
    for (auto const& f : r.condition_flags) flags.push_back({{"name", f.name}, {"pass", f.pass}, {"margin", f.margin}});
    nlohmann::json j = {{"verdict", r.verdict},           {"rho", r.rho},
                        {"inner_margin", r.inner_margin}, {"outer_min_T", r.outer_min_T},
                        {"condition_flags", flags}};
    if (std::isfinite(r.outer_argmin)) j["outer_argmin"] = r.outer_argmin;
    else j["outer_argmin"] = "infinity";
    return j;
}

struct ThresholdRow {
    std::string name;
    double N_threshold = 0.0;
    bool applicable = false;
};

/// Electron counts beyond which the theorems exclude binding. The linear
/// (electrostatic) term carries the model's charge multiplier; the nonlinear
/// terms keep their constant A.
inline std::vector<ThresholdRow> theorem_thresholds(double Z, double B, ModelSpec const& model,
                                                    BoundParams const& params) {
    params.validate();
    if (!(Z > 0.0) || !(B > 0.0)) throw InvalidInput("theorem_thresholds: Z and B must be positive");
    double const k = model.charge_multiplier;
    double const logZ = std::log(Z);
    double const logB = std::log(B);
    bool const hyp = model.satisfies_nu_le_2mu();
    bool const above = B >= params.a2 * std::pow(Z, gamma_nu(model, params.epsilon));
    bool const superstrong = Z > 1.0 && B >= params.a2 * std::pow(Z, 3.0 + params.epsilon);

    std::vector<ThresholdRow> rows;
    double const t1 = 2.0 * k * Z + params.A * std::pow(Z, 1.0 + params.alpha);
    bool const w1 = hyp && above && logB < std::log(params.a1) + std::pow(Z, params.alpha / 4.0);
    rows.push_back({"theorem1", t1, w1});

    double const t2 = 3.0 * k * Z + 1.0 + params.A * Z * logZ * std::abs(std::log(Z * Z / B));
    bool const w2 = hyp && above && logB < std::log(params.a1) + std::pow(Z, 0.5 - params.epsilon);
    rows.push_back({"theorem2", t2, w2});

    double const t3 = 3.0 * k * Z + params.A * Z * logZ * logZ;
    rows.push_back({"corollary3", t3, hyp && superstrong});

    if (model.kind == ModelKind::m_momentum) {
        rows.push_back({"corollary4a", t1, w1});
        rows.push_back({"corollary4b", t3, hyp && superstrong});
    } else if (model.kind == ModelKind::slater) {
        rows.push_back({"corollary5a", t1, w1});
        rows.push_back({"corollary5b", t3, hyp && superstrong});
    }

    double const g = logZ * logZ + logZ * std::pow(std::max(logB, 0.0), 1.0 + params.omega);
    rows.push_back({"remark2", 3.0 * k * Z + params.A * Z * g, hyp && above});
    return rows;
}

} // namespace landau1d
