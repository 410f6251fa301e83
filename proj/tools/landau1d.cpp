// landau1d command line tool.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "landau1d/landau1d.hpp"

using namespace landau1d;
using nlohmann::json;

namespace {

constexpr char const* version = "0.1.0";

enum Exit { ok = 0, negative = 1, usage = 2, failure = 3 };

struct Globals {
    std::string out;
    std::string params_path;
    unsigned long long seed = 1;
    int workers = 1;
    bool timestamp = false;
};

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string join(std::vector<std::string> const& parts, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

std::vector<std::string> split(std::string const& s, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double to_number(std::string const& text, std::string const& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (std::exception const&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw InvalidInput("cannot parse " + what + " '" + text + "'");
    return v;
}

/// "1e7", "Z^4", "10*Z^3", "2Z^2.5", "Z".
double parse_field(std::string const& text, double Z) {
    static std::regex const power(R"(^\s*([0-9.]+(?:[eE][-+]?[0-9]+)?)?\s*\*?\s*Z(?:\s*\^\s*([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?))?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, power)) {
        double const coef = m[1].matched ? to_number(m[1].str(), "field coefficient") : 1.0;
        double const p = m[2].matched ? to_number(m[2].str(), "field exponent") : 1.0;
        return coef * std::pow(Z, p);
    }
    return to_number(text, "field strength");
}

/// "L=40,n=4001" or "L=40,h=0.02".
Grid1D parse_grid(std::string const& text) {
    std::optional<double> L, h;
    std::optional<int> n;
    for (auto const& part : split(text)) {
        auto const eq = part.find('=');
        if (eq == std::string::npos) throw InvalidInput("grid spec entries look like key=value: '" + part + "'");
        std::string const key = part.substr(0, eq), val = part.substr(eq + 1);
        if (key == "L") L = to_number(val, "grid L");
        else if (key == "n") n = static_cast<int>(to_number(val, "grid n"));
        else if (key == "h") h = to_number(val, "grid h");
        else throw InvalidInput("unknown grid key '" + key + "'");
    }
    if (!L) throw InvalidInput("grid spec needs L");
    if (n && h) throw InvalidInput("grid spec takes n or h, not both");
    if (h) {
        int const half = static_cast<int>(std::ceil(*L / *h));
        return Grid1D(half * *h, 2 * half + 1);
    }
    if (!n) throw InvalidInput("grid spec needs n or h");
    return Grid1D(*L, *n);
}

ModelFamily resolve_family(std::string const& text) {
    if (text == "slater") return slater_family();
    return fixed_model(parse_model(text));
}

BoundParams load_params(Globals const& g) {
    std::string path = g.params_path;
    if (path.empty())
        if (char const* env = std::getenv("LANDAU1D_PARAMS")) path = env;
    if (path.empty()) return {};
    return load_bound_params(path);
}

template <class F>
void parallel_for(int count, int workers, F&& body) {
    if (workers <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex lock;
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(workers, count); ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> guard(lock);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

/// Every option of the selected command chain, as given or defaulted.
json config_of(CLI::App const* app) {
    json cfg = json::object();
    std::vector<std::string> words;
    for (CLI::App const* a = app; a; a = a->get_subcommands().empty() ? nullptr : a->get_subcommands().front()) {
        if (a->get_parent()) words.push_back(a->get_name());
        for (CLI::Option const* opt : a->get_options()) {
            if (opt->get_lnames().empty() || opt->get_lnames().front() == "help") continue;
            std::string const key = opt->get_lnames().front();
            if (opt->count() > 0) {
                auto const& r = opt->results();
                cfg[key] = r.size() == 1 ? json(r.front()) : json(r);
            } else if (!opt->get_default_str().empty()) {
                cfg[key] = opt->get_default_str();
            }
        }
    }
    cfg["command"] = join(words, ' ');
    return cfg;
}

std::string timestamp_now() {
    std::time_t const t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

class Emitter {
public:
    Emitter(Globals const& g, json config) : g_(g), config_(std::move(config)) {}

    void comment(std::string const& line) { comments_.push_back(line); }

    void csv(std::vector<std::string> header, std::vector<std::vector<std::string>> rows) {
        std::ostringstream s;
        write_header(s);
        s << join(header) << '\n';
        for (auto const& r : rows) s << join(r) << '\n';
        flush(s.str());
    }

    void report(json body) {
        json meta = {{"version", version}, {"config", config_}, {"seed", g_.seed}};
        if (g_.timestamp) meta["timestamp"] = timestamp_now();
        for (auto const& c : comments_) meta["notes"].push_back(c);
        body["meta"] = meta;
        flush(body.dump(2) + "\n");
    }

private:
    void write_header(std::ostream& s) const {
        s << "# landau1d " << version << '\n';
        s << "# command: " << config_.value("command", "") << '\n';
        s << "# config: " << config_.dump() << '\n';
        s << "# seed: " << g_.seed << '\n';
        if (g_.timestamp) s << "# timestamp: " << timestamp_now() << '\n';
        for (auto const& c : comments_) s << "# " << c << '\n';
    }

    void flush(std::string const& text) const {
        if (g_.out.empty() || g_.out == "-") {
            std::cout << text;
            return;
        }
        std::ofstream f(g_.out);
        if (!f) throw InvalidInput("cannot write " + g_.out);
        f << text;
    }

    Globals const& g_;
    json config_;
    std::vector<std::string> comments_;
};

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Csv read_csv(std::string const& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    Csv c;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto cells = split(line);
        if (c.header.empty()) {
            c.header = std::move(cells);
            continue;
        }
        if (cells.size() != c.header.size())
            throw InvalidInput(path + ": row has " + std::to_string(cells.size()) + " cells, header has " +
                               std::to_string(c.header.size()));
        c.rows.push_back(std::move(cells));
    }
    if (c.header.empty()) throw InvalidInput(path + ": no header row");
    return c;
}

std::optional<double> numeric(std::string const& s) {
    if (s == "nan") return std::nan("");
    char* end = nullptr;
    double const v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) return std::nullopt;
    return v;
}

json error_json(std::exception const& e) {
    json j = {{"message", e.what()}, {"type", "error"}};
    if (auto const* x = dynamic_cast<InvalidInput const*>(&e)) {
        (void)x;
        j["type"] = "invalid_input";
    } else if (auto const* x = dynamic_cast<AccuracyError const*>(&e)) {
        j["type"] = "accuracy";
        j["best_estimate"] = x->best_estimate;
        j["error_bound"] = x->error_bound;
    } else if (auto const* x = dynamic_cast<NonConvergence const*>(&e)) {
        j["type"] = "non_convergence";
        j["residual_history"] = x->residual_history;
    } else if (auto const* x = dynamic_cast<DomainTooSmall const*>(&e)) {
        j["type"] = "domain_too_small";
        j["suggested_half_extent"] = x->suggested_half_extent;
    } else if (dynamic_cast<SizeError const*>(&e)) {
        j["type"] = "size";
    } else if (dynamic_cast<NearSingular const*>(&e)) {
        j["type"] = "near_singular";
    } else if (auto const* x = dynamic_cast<EnvelopeError const*>(&e)) {
        j["type"] = "envelope";
        j["worst_x"] = x->worst_x;
        j["worst_violation"] = x->worst_violation;
    } else if (dynamic_cast<SamplingError const*>(&e)) {
        j["type"] = "sampling";
    } else if (!dynamic_cast<Error const*>(&e)) {
        j["type"] = "internal";
    }
    return {{"error", j}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-dimensional effective models of atoms in strong magnetic fields", "landau1d"};
    app.set_version_flag("--version", std::string("landau1d ") + version);
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--out", g.out, "Output file (default stdout)");
    app.add_option("--params", g.params_path, "Bound-parameter JSON (default $LANDAU1D_PARAMS)");
    app.add_option("--seed", g.seed, "Seed for sampling")->capture_default_str();
    app.add_option("--workers", g.workers, "Worker threads for sweeps")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_flag("--timestamp", g.timestamp, "Record a timestamp in output headers");

    // potentials table
    auto* pot = app.add_subcommand("potentials", "Regularized Coulomb potentials");
    pot->require_subcommand(1);
    pot->fallthrough();
    auto* pot_table = pot->add_subcommand("table", "Tabulate V_m on an x grid");
    std::vector<int> pt_m{0};
    double pt_xmin = 0.0, pt_xmax = 10.0, pt_B = 1.0;
    int pt_points = 201;
    pot_table->add_option("--m", pt_m, "Landau indices")->delimiter(',')->capture_default_str();
    pot_table->add_option("--xmin", pt_xmin)->capture_default_str();
    pot_table->add_option("--xmax", pt_xmax)->capture_default_str();
    pot_table->add_option("--points", pt_points)->capture_default_str()->check(CLI::PositiveNumber);
    pot_table->add_option("--B", pt_B, "Field strength (V_m^B)")->capture_default_str();
    pot_table->fallthrough();

    // interactions
    auto* inter = app.add_subcommand("interactions", "Effective interaction coefficients");
    inter->require_subcommand(1);
    inter->fallthrough();
    auto* coeffs = inter->add_subcommand("coeffs", "Convex-combination weights");
    std::string ic_kind = "product";
    std::vector<int> ic_m;
    coeffs->add_option("--kind", ic_kind)->check(CLI::IsMember({"product", "slater", "det"}))->capture_default_str();
    coeffs->add_option("--m", ic_m, "Landau indices")->delimiter(',')->required();
    coeffs->fallthrough();
    auto* verify = inter->add_subcommand("verify", "Cross-check coefficients against direct quadrature");
    int iv_max = 6;
    double iv_tol = 1e-6;
    std::vector<double> iv_x{0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
    verify->add_option("--max-m", iv_max)->capture_default_str()->check(CLI::Range(0, 8));
    verify->add_option("--tol", iv_tol)->capture_default_str();
    verify->add_option("--x", iv_x)->delimiter(',')->capture_default_str();
    verify->fallthrough();

    // solve
    auto* solve = app.add_subcommand("solve", "Ground-state energy of the N-electron model");
    std::string sv_model = "m0", sv_solver = "hartree", sv_grid, sv_B = "100";
    double sv_Z = 1.0;
    int sv_N = 1;
    solve->add_option("--model", sv_model)->capture_default_str();
    solve->add_option("--Z", sv_Z)->capture_default_str();
    solve->add_option("--B", sv_B, "Field strength, number or power of Z")->capture_default_str();
    solve->add_option("--N", sv_N)->capture_default_str();
    solve->add_option("--solver", sv_solver)->check(CLI::IsMember({"hartree", "exact2"}))->capture_default_str();
    solve->add_option("--grid", sv_grid, "L=<half extent>,n=<points> or L=..,h=..");
    solve->fallthrough();

    // scan nmax
    auto* scan = app.add_subcommand("scan", "Parameter scans");
    scan->require_subcommand(1);
    scan->fallthrough();
    auto* nmax = scan->add_subcommand("nmax", "Largest N with E(N) < E(N-1)");
    std::string sn_model = "m0", sn_solver = "hartree", sn_grid, sn_B = "100";
    double sn_Z = 1.0;
    int sn_cap = 8;
    nmax->add_option("--model", sn_model, "m0, m:<k>, slater, slater:<N>, custom:<file>")->capture_default_str();
    nmax->add_option("--Z", sn_Z)->capture_default_str();
    nmax->add_option("--B", sn_B)->capture_default_str();
    nmax->add_option("--cap", sn_cap)->capture_default_str()->check(CLI::PositiveNumber);
    nmax->add_option("--solver", sn_solver)->check(CLI::IsMember({"hartree", "exact2"}))->capture_default_str();
    nmax->add_option("--grid", sn_grid);
    nmax->fallthrough();

    // certify
    auto* certify = app.add_subcommand("certify", "No-binding certificate");
    std::string cf_model = "m0", cf_B = "100";
    double cf_Z = 1.0;
    int cf_N = 1;
    certify->add_option("--model", cf_model)->capture_default_str();
    certify->add_option("--Z", cf_Z)->capture_default_str();
    certify->add_option("--B", cf_B)->capture_default_str();
    certify->add_option("--N", cf_N)->capture_default_str();
    certify->fallthrough();

    // thresholds
    auto* thresholds = app.add_subcommand("thresholds", "Closed-form electron-count thresholds");
    std::string th_model = "m0", th_B = "Z^4";
    std::vector<double> th_Z{10.0};
    thresholds->add_option("--model", th_model)->capture_default_str();
    thresholds->add_option("--Z", th_Z, "One or more nuclear charges")->delimiter(',')->capture_default_str();
    thresholds->add_option("--B", th_B)->capture_default_str();
    thresholds->fallthrough();

    // partition check
    auto* part = app.add_subcommand("partition", "Partition of unity");
    part->require_subcommand(1);
    part->fallthrough();
    auto* pcheck = part->add_subcommand("check", "Estimate the gradient constant lambda");
    std::vector<int> pc_N{4, 16, 64};
    double pc_delta = 1.0, pc_rho = 1.0;
    int pc_samples = 10000;
    pcheck->add_option("--N", pc_N)->delimiter(',')->capture_default_str();
    pcheck->add_option("--delta", pc_delta)->capture_default_str();
    pcheck->add_option("--rho", pc_rho)->capture_default_str();
    pcheck->add_option("--samples", pc_samples)->capture_default_str();
    pcheck->fallthrough();

    // replot / diff
    auto* replot = app.add_subcommand("replot", "Re-emit a landau1d CSV, optionally selecting columns");
    std::string rp_in;
    std::vector<std::string> rp_cols;
    replot->add_option("--in", rp_in)->required();
    replot->add_option("--columns", rp_cols)->delimiter(',');
    replot->fallthrough();
    auto* diff = app.add_subcommand("diff", "Compare two landau1d CSV files");
    std::string df_a, df_b;
    double df_rtol = 1e-12, df_atol = 0.0;
    diff->add_option("a", df_a)->required();
    diff->add_option("b", df_b)->required();
    diff->add_option("--rtol", df_rtol)->capture_default_str();
    diff->add_option("--atol", df_atol)->capture_default_str();
    diff->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForVersion const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        std::cerr << json{{"error", {{"type", "usage"}, {"message", e.what()}}}}.dump() << '\n';
        std::cerr << "run with --help for usage\n";
        return usage;
    }

    try {
        Emitter out(g, config_of(&app));

        if (pot_table->parsed()) {
            if (pt_points < 1) throw InvalidInput("--points must be >= 1");
            for (int m : pt_m) (void)LandauIndex(m);
            auto const xs = pt_points == 1 ? std::vector<double>{pt_xmin} : linspace(pt_xmin, pt_xmax, pt_points);
            std::vector<std::vector<std::string>> rows(xs.size());
            parallel_for(static_cast<int>(xs.size()), g.workers, [&](int i) {
                std::vector<std::string> r{fmt(xs[i])};
                for (int m : pt_m) r.push_back(fmt(eval_vm_field(m, pt_B, xs[i])));
                rows[i] = std::move(r);
            });
            std::vector<std::string> header{"x"};
            for (int m : pt_m) header.push_back("V_" + std::to_string(m));
            out.csv(header, rows);
            return ok;
        }

        if (coeffs->parsed()) {
            std::vector<BigRational> exact;
            if (ic_kind == "det") {
                exact = det_coefficients_exact(ic_m);
            } else {
                if (ic_m.size() != 2) throw InvalidInput("--kind " + ic_kind + " takes two indices");
                exact = ic_kind == "product" ? pair_coefficients_exact(ic_m[0], ic_m[1])
                                             : slater_pair_coefficients_exact(ic_m[0], ic_m[1]);
            }
            std::vector<std::vector<std::string>> rows;
            for (std::size_t j = 0; j < exact.size(); ++j) {
                double const w = exact[j] == 0 ? 0.0 : exact[j].convert_to<double>();
                rows.push_back({std::to_string(j), fmt(w), exact[j].str()});
            }
            out.csv({"index", "weight", "exact"}, rows);
            return ok;
        }

        if (verify->parsed()) {
            struct Task {
                std::string kind;
                int a, b;
                double x;
            };
            std::vector<Task> tasks;
            for (int a = 0; a <= iv_max; ++a)
                for (int b = a; b <= iv_max; ++b)
                    for (double x : iv_x) {
                        tasks.push_back({"product", a, b, x});
                        if (a < b) tasks.push_back({"slater", a, b, x});
                    }
            std::vector<std::vector<std::string>> rows(tasks.size());
            std::vector<char> pass(tasks.size(), 0);
            parallel_for(static_cast<int>(tasks.size()), g.workers, [&](int i) {
                auto const& t = tasks[i];
                bool const prod = t.kind == "product";
                double const viaw = eval_w(prod ? pair_coefficients(t.a, t.b) : slater_pair_coefficients(t.a, t.b), t.x);
                double const orc = prod ? oracle_w_direct(t.a, t.b, t.x) : oracle_w_slater_pair(t.a, t.b, t.x);
                double const rel = std::abs(viaw - orc) / std::abs(orc);
                pass[i] = rel <= iv_tol;
                rows[i] = {t.kind, std::to_string(t.a), std::to_string(t.b), fmt(t.x), fmt(viaw), fmt(orc), fmt(rel),
                           pass[i] ? "1" : "0"};
            });
            int const failures = static_cast<int>(std::count(pass.begin(), pass.end(), 0));
            out.comment("checks: " + std::to_string(tasks.size()) + ", failures: " + std::to_string(failures));
            out.csv({"kind", "m1", "m2", "x", "coefficients", "oracle", "rel_diff", "pass"}, rows);
            return failures == 0 ? ok : negative;
        }

        if (solve->parsed()) {
            double const B = parse_field(sv_B, sv_Z);
            auto const model = resolve_family(sv_model)(sv_N);
            auto const grid = sv_grid.empty() ? default_grid(sv_Z, B, model) : parse_grid(sv_grid);
            auto const solver = parse_solver(sv_solver);
            auto const info = solve_energy(sv_N, sv_Z, B, model, grid, solver);
            out.comment("grid: " + grid.describe());
            out.csv({"N", "Z", "B", "model", "solver", "energy", "full_energy", "iterations", "residual"},
                    {{std::to_string(sv_N), fmt(sv_Z), fmt(B), model.label, sv_solver, fmt(info.energy),
                      fmt(full_energy(info.energy, sv_N, B)), std::to_string(info.iterations), fmt(info.residual)}});
            return ok;
        }

        if (nmax->parsed()) {
            double const B = parse_field(sn_B, sn_Z);
            auto const family = resolve_family(sn_model);
            auto const grid = sn_grid.empty() ? default_grid(sn_Z, B, family(sn_cap)) : parse_grid(sn_grid);
            auto const res = nmax_scan(sn_Z, B, family, sn_cap, grid, parse_solver(sn_solver));
            out.comment("grid: " + grid.describe());
            out.comment("n_max: " + std::to_string(res.n_max) + (res.truncated ? " (truncated at cap)" : ""));
            out.comment("n_max is a lower-bound estimate: Hartree energies are upper bounds");
            std::vector<std::vector<std::string>> rows;
            for (auto const& r : res.rows) {
                if (!r.error.empty()) out.comment("error at N=" + std::to_string(r.N) + ": " + r.error);
                rows.push_back({std::to_string(r.N), fmt(r.energy), r.bound ? "1" : "0", std::to_string(r.iterations),
                                fmt(r.residual)});
            }
            out.csv({"N", "energy", "bound_flag", "iterations", "residual"}, rows);
            return ok;
        }

        if (certify->parsed()) {
            auto const params = load_params(g);
            double const B = parse_field(cf_B, cf_Z);
            auto const model = resolve_family(cf_model)(cf_N);
            auto const rep = no_binding_certificate(cf_N, cf_Z, B, model, params);
            json body = to_json(rep);
            body["N"] = cf_N;
            body["Z"] = cf_Z;
            body["B"] = B;
            body["model"] = model.label;
            body["params"] = to_json(params);
            out.report(body);
            return rep.verdict ? ok : negative;
        }

        if (thresholds->parsed()) {
            auto const params = load_params(g);
            auto const model = resolve_family(th_model)(2);
            std::vector<std::vector<std::vector<std::string>>> blocks(th_Z.size());
            parallel_for(static_cast<int>(th_Z.size()), g.workers, [&](int i) {
                double const Z = th_Z[i];
                double const B = parse_field(th_B, Z);
                for (auto const& r : theorem_thresholds(Z, B, model, params))
                    blocks[i].push_back({fmt(Z), fmt(B), r.name, fmt(r.N_threshold), r.applicable ? "1" : "0"});
            });
            std::vector<std::vector<std::string>> rows;
            for (auto& b : blocks) rows.insert(rows.end(), b.begin(), b.end());
            out.comment("params: " + to_json(params).dump());
            out.csv({"Z", "B", "name", "N_threshold", "applicable"}, rows);
            return ok;
        }

        if (pcheck->parsed()) {
            auto const res = partition_check(pc_N, pc_delta, pc_samples, g.seed, pc_rho);
            out.comment("lambda_estimate: " + fmt(res.lambda));
            out.comment("spread: " + fmt(res.spread));
            out.comment("log_log_slope: " + fmt(res.log_log_slope));
            std::vector<std::vector<std::string>> rows;
            for (auto const& r : res.rows)
                rows.push_back({std::to_string(r.N), fmt(r.lambda), fmt(r.raw_sup), fmt(r.max_sum_error),
                                std::to_string(r.interior_samples)});
            out.csv({"N", "lambda", "raw_sup", "max_sum_error", "interior_samples"}, rows);
            return ok;
        }

        if (replot->parsed()) {
            auto const c = read_csv(rp_in);
            std::vector<std::size_t> pick;
            if (rp_cols.empty()) {
                for (std::size_t i = 0; i < c.header.size(); ++i) pick.push_back(i);
            } else {
                for (auto const& name : rp_cols) {
                    auto const it = std::find(c.header.begin(), c.header.end(), name);
                    if (it == c.header.end()) throw InvalidInput("no column '" + name + "' in " + rp_in);
                    pick.push_back(static_cast<std::size_t>(it - c.header.begin()));
                }
            }
            std::vector<std::string> header;
            for (auto i : pick) header.push_back(c.header[i]);
            std::vector<std::vector<std::string>> rows;
            for (auto const& r : c.rows) {
                std::vector<std::string> o;
                for (auto i : pick) {
                    auto const v = numeric(r[i]);
                    o.push_back(v ? fmt(*v) : r[i]);
                }
                rows.push_back(std::move(o));
            }
            out.comment("source: " + rp_in);
            out.csv(header, rows);
            return ok;
        }

        if (diff->parsed()) {
            auto const a = read_csv(df_a);
            auto const b = read_csv(df_b);
            if (a.header != b.header) throw InvalidInput("headers differ: " + join(a.header) + " vs " + join(b.header));
            if (a.rows.size() != b.rows.size())
                throw InvalidInput("row counts differ: " + std::to_string(a.rows.size()) + " vs " +
                                   std::to_string(b.rows.size()));
            std::vector<double> max_abs(a.header.size(), 0.0), max_rel(a.header.size(), 0.0);
            std::vector<int> mismatches(a.header.size(), 0);
            for (std::size_t r = 0; r < a.rows.size(); ++r)
                for (std::size_t k = 0; k < a.header.size(); ++k) {
                    auto const x = numeric(a.rows[r][k]), y = numeric(b.rows[r][k]);
                    if (x && y) {
                        if (std::isnan(*x) && std::isnan(*y)) continue;
                        double const d = std::abs(*x - *y);
                        double const rel = d / std::max(std::abs(*x), std::abs(*y));
                        max_abs[k] = std::max(max_abs[k], d);
                        if (d > 0) max_rel[k] = std::max(max_rel[k], rel);
                        if (!(d <= df_atol || rel <= df_rtol)) ++mismatches[k];
                    } else if (a.rows[r][k] != b.rows[r][k]) {
                        ++mismatches[k];
                    }
                }
            std::vector<std::vector<std::string>> rows;
            int total = 0;
            for (std::size_t k = 0; k < a.header.size(); ++k) {
                rows.push_back({a.header[k], fmt(max_abs[k]), fmt(max_rel[k]), std::to_string(mismatches[k])});
                total += mismatches[k];
            }
            out.comment("rows: " + std::to_string(a.rows.size()) + ", mismatching cells: " + std::to_string(total));
            out.csv({"column", "max_abs_diff", "max_rel_diff", "mismatches"}, rows);
            return total == 0 ? ok : negative;
        }
    } catch (std::exception const& e) {
        std::cerr << error_json(e).dump() << '\n';
        return dynamic_cast<InvalidInput const*>(&e) ? usage : failure;
    }
    return usage;
}
