#pragma once
// Named effective one-dimensional models and their envelope data.
//
// A model supplies the nuclear potential V~(x), the interaction W~(x) as a
// coefficient vector, and the envelope indices used by the certificates:
//     V~(x) <= charge_multiplier * V_mu(x),      W~(x) >= (1/sqrt2) V_floor(x/sqrt2).
// `floor` is kept separately from nu: for the m-model the interaction bound
// is V_{2m} while the certificate formulas use nu = 2m; for the Slater model
// floor = nu - 1 = 2N - 3.

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "landau1d/errors.hpp"
#include "landau1d/interactions.hpp"
#include "landau1d/potentials.hpp"

namespace landau1d {

enum class ModelKind { m_momentum, slater, custom };

inline char const* to_string(ModelKind k) {
    switch (k) {
    case ModelKind::m_momentum: return "m-momentum";
    case ModelKind::slater: return "slater";
    case ModelKind::custom: return "custom";
    }
    return "?";
}

struct ModelSpec {
    ModelKind kind = ModelKind::custom;
    std::string label;
    std::function<double(double)> nuclear_potential;
    CoefficientVector interaction;
    int mu = 0;
    int nu = 0;
    int floor = 0;
    double charge_multiplier = 1.0;

    bool satisfies_nu_le_2mu() const { return nu <= 2 * mu; }

    double nuclear(double x) const { return nuclear_potential(x); }
    double interaction_at(double x, QuadratureSpec const& quad = {}) const {
        return eval_w(interaction, x, quad);
    }
};

struct EnvelopeReport {
    bool ok = true;
    double nuclear_worst_x = 0.0;
    double nuclear_worst = -std::numeric_limits<double>::infinity(); // max of V~ - mult V_mu
    double interaction_worst_x = 0.0;
    double interaction_worst = -std::numeric_limits<double>::infinity(); // max of floor - W~
};

inline std::vector<double> validation_grid() {
    std::vector<double> xs;
    for (int i = 0; i <= 500; ++i) xs.push_back(0.1 * i);
    return xs;
}

inline EnvelopeReport check_envelope(ModelSpec const& model, double slack = 1e-9,
                                     std::vector<double> const& xs = validation_grid()) {
    EnvelopeReport r;
    for (double x : xs) {
        double const dn = model.nuclear(x) - model.charge_multiplier * eval_vm(model.mu, x);
        if (dn > r.nuclear_worst) {
            r.nuclear_worst = dn;
            r.nuclear_worst_x = x;
        }
        double const di = scaled_vm(model.floor, x) - model.interaction_at(x);
        if (di > r.interaction_worst) {
            r.interaction_worst = di;
            r.interaction_worst_x = x;
        }
    }
    r.ok = r.nuclear_worst <= slack && r.interaction_worst <= slack;
    return r;
}

/// Every electron in the Landau state gamma_m.
inline ModelSpec make_m_model(LandauIndex m_index) {
    int const m = m_index;
    ModelSpec s;
    s.kind = ModelKind::m_momentum;
    s.label = m == 0 ? "m0" : "m:" + std::to_string(m);
    s.nuclear_potential = [m](double x) { return eval_vm(m, x); };
    s.interaction = pair_coefficients(m, m);
    s.mu = m;
    s.nu = 2 * m;
    s.floor = 2 * m;
    s.charge_multiplier = 1.0;
    return s;
}

/// Transverse factor gamma_0 ^ ... ^ gamma_{N-1}.
inline ModelSpec make_slater_model(int N) {
    if (N < 2) throw InvalidInput("make_slater_model: N must be >= 2");
    ModelSpec s;
    s.kind = ModelKind::slater;
    s.label = "slater:" + std::to_string(N);
    s.nuclear_potential = [N](double x) { return eval_vav(N, x); };
    auto const idx = canonical_slater_indices(N);
    s.interaction = det_coefficients(idx);
    s.mu = N;
    s.nu = 2 * N - 2;
    s.floor = 2 * N - 3;
    s.charge_multiplier = 2.0;
    return s;
}

/// User-declared envelope, verified on x = 0, 0.1, ..., 50. The interaction
/// floor is V_{nu-1} (V_0 when nu = 0).
inline ModelSpec make_custom_model(std::function<double(double)> nuclear, CoefficientVector interaction,
                                   int mu, int nu, double multiplier, std::string label = "custom") {
    if (mu < 0 || nu < 0) throw InvalidInput("make_custom_model: mu and nu must be nonnegative");
    if (!(multiplier >= 1.0)) throw InvalidInput("make_custom_model: charge multiplier must be >= 1");
    if (!nuclear) throw InvalidInput("make_custom_model: nuclear potential missing");
    interaction.validate();
    ModelSpec s;
    s.kind = ModelKind::custom;
    s.label = std::move(label);
    s.nuclear_potential = std::move(nuclear);
    s.interaction = std::move(interaction);
    s.mu = mu;
    s.nu = nu;
    s.floor = nu > 0 ? nu - 1 : 0;
    s.charge_multiplier = multiplier;
    auto const rep = check_envelope(s);
    if (rep.nuclear_worst > 1e-9)
        throw EnvelopeError("custom model: nuclear potential exceeds multiplier*V_" + std::to_string(mu) +
                                " at x=" + std::to_string(rep.nuclear_worst_x),
                            rep.nuclear_worst_x, rep.nuclear_worst);
    if (rep.interaction_worst > 1e-9)
        throw EnvelopeError("custom model: interaction below (1/sqrt2)V_" + std::to_string(s.floor) +
                                "(x/sqrt2) at x=" + std::to_string(rep.interaction_worst_x),
                            rep.interaction_worst_x, rep.interaction_worst);
    return s;
}

namespace detail {

inline std::function<double(double)> nuclear_from_json(nlohmann::json const& j) {
    std::string const kind = j.value("kind", "vm");
    if (kind == "vm") {
        int const m = j.at("m").get<int>();
        (void)LandauIndex(m);
        return [m](double x) { return eval_vm(m, x); };
    }
    if (kind == "vav") {
        int const n = j.at("N").get<int>();
        if (n < 1) throw InvalidInput("custom model: vav needs N >= 1");
        return [n](double x) { return eval_vav(n, x); };
    }
    if (kind == "mix") {
        auto const w = j.at("weights").get<std::vector<double>>();
        if (w.empty()) throw InvalidInput("custom model: empty nuclear mixture");
        for (double v : w)
            if (!(v >= 0.0)) throw InvalidInput("custom model: negative nuclear weight");
        return [w](double x) {
            auto const v = eval_vm_range(static_cast<int>(w.size()) - 1, x);
            double s = 0.0;
            for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * v[i];
            return s;
        };
    }
    throw InvalidInput("custom model: unknown nuclear kind '" + kind + "'");
}

inline CoefficientVector interaction_from_json(nlohmann::json const& j) {
    std::string const kind = j.value("kind", "weights");
    if (kind == "weights") {
        CoefficientVector c;
        c.weights = j.at("weights").get<std::vector<double>>();
        return c;
    }
    auto const m = j.at("m").get<std::vector<int>>();
    if (kind == "pair") {
        if (m.size() != 2) throw InvalidInput("custom model: pair needs two indices");
        return pair_coefficients(m[0], m[1]);
    }
    if (kind == "slater") {
        if (m.size() != 2) throw InvalidInput("custom model: slater needs two indices");
        return slater_pair_coefficients(m[0], m[1]);
    }
    if (kind == "det") return det_coefficients(m);
    throw InvalidInput("custom model: unknown interaction kind '" + kind + "'");
}

} // namespace detail

/// {"nuclear": {"kind": "vm", "m": 1}, "interaction": {"kind": "pair", "m": [0, 0]},
///  "mu": 1, "nu": 1, "multiplier": 1}
inline ModelSpec model_from_json(nlohmann::json const& j, std::string label = "custom") {
    try {
        return make_custom_model(detail::nuclear_from_json(j.at("nuclear")),
                                 detail::interaction_from_json(j.at("interaction")), j.at("mu").get<int>(),
                                 j.at("nu").get<int>(), j.value("multiplier", 1.0), std::move(label));
    } catch (nlohmann::json::exception const& e) {
        throw InvalidInput(std::string("custom model: ") + e.what());
    }
}

inline ModelSpec load_custom_model(std::string const& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("custom model: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (nlohmann::json::exception const& e) {
        throw InvalidInput("custom model: " + path + ": " + e.what());
    }
    return model_from_json(j, "custom:" + path);
}

/// "m0", "m:<k>", "slater:<N>", "custom:<file>".
inline ModelSpec parse_model(std::string const& text) {
    auto int_after = [&](std::size_t pos) {
        std::string const tail = text.substr(pos);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tail, &used);
        } catch (std::exception const&) {
            used = 0;
        }
        if (used == 0 || used != tail.size()) throw InvalidInput("bad model string '" + text + "'");
        return v;
    };
    if (text == "m0") return make_m_model(0);
    if (text.rfind("m:", 0) == 0) return make_m_model(int_after(2));
    if (text == "slater") throw InvalidInput("slater model needs an electron count: slater:<N>");
    if (text.rfind("slater:", 0) == 0) return make_slater_model(int_after(7));
    if (text.rfind("custom:", 0) == 0) return load_custom_model(text.substr(7));
    throw InvalidInput("unknown model '" + text + "' (expected m0, m:<k>, slater:<N>, custom:<file>)");
}

} // namespace landau1d
