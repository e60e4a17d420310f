// Command-line front end over the C API: evaluate the function family,
// verify the eigenpair catalog, compute truncated-recurrence spectra, and
// run the two enumeration routes.  Output is CSV or JSON, deterministic,
// with shortest round-trip decimal formatting.
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 convergence
// failure, 4 verification failure.
//
// SPDX-License-Identifier: Apache-2.0
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "glame/glame.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitVerifyFailed = 4;

[[noreturn]] void fail(glame_status st, const std::string& what) {
    std::cerr << "glame: " << what << ": " << glame_status_name(st) << "\n";
    std::exit(st == GLAME_ERR_CONVERGENCE ? kExitConvergence : kExitDomain);
}

void check(glame_status st, const std::string& what) {
    if (st != GLAME_OK) fail(st, what);
}

std::string fmt(double v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

struct GridSpec {
    double start = 0, stop = 0;
    int count = 0;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char extra;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.start, &g.stop, &g.count, &extra) != 3 ||
        g.count < 1) {
        std::cerr << "glame: bad grid spec '" << text << "' (want start:stop:count)\n";
        std::exit(kExitUsage);
    }
    return g;
}

glame_params parse_params(const std::string& text) {
    glame_params p{};
    char extra;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf,%lf%c", &p.alpha, &p.beta, &p.gamma, &p.delta,
                    &p.lambda, &extra) != 5) {
        std::cerr << "glame: bad params '" << text
                  << "' (want alpha,beta,gamma,delta,lambda)\n";
        std::exit(kExitUsage);
    }
    return p;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(output_path, std::ios::binary);
    if (!os) {
        std::cerr << "glame: cannot open '" << output_path << "'\n";
        std::exit(kExitDomain);
    }
    os << text;
}

struct ModulusHandle {
    glame_modulus* m = nullptr;
    ModulusHandle(double k1, double k2) { check(glame_modulus_create(k1, k2, &m), "modulus"); }
    ~ModulusHandle() { glame_modulus_destroy(m); }
    ModulusHandle(const ModulusHandle&) = delete;
    ModulusHandle& operator=(const ModulusHandle&) = delete;
};

const char* kClassNames[4] = {"even_pi", "odd_pi", "odd_2pi", "even_2pi"};

int cmd_eval(double k1, double k2, const std::string& grid_text, const glame_params& params,
             const std::string& format, const std::string& output) {
    const GridSpec g = parse_grid(grid_text);
    ModulusHandle mod(k1, k2);
    json rows = json::array();
    std::ostringstream csv;
    csv << "z,s,c,d1,d2,V\n";
    for (int i = 0; i < g.count; ++i) {
        const double z =
            g.count == 1 ? g.start : g.start + (g.stop - g.start) * i / (g.count - 1);
        glame_point pt;
        check(glame_eval(mod.m, z, &pt), "eval");
        double v;
        check(glame_potential(mod.m, &params, z, &v), "potential");
        if (format == "json") {
            rows.push_back({{"z", z}, {"s", pt.s}, {"c", pt.c}, {"d1", pt.d1}, {"d2", pt.d2},
                            {"V", v}});
        } else {
            csv << fmt(z) << ',' << fmt(pt.s) << ',' << fmt(pt.c) << ',' << fmt(pt.d1) << ','
                << fmt(pt.d2) << ',' << fmt(v) << '\n';
        }
    }
    if (format == "json") {
        json out = {{"k1", k1},
                    {"k2", k2},
                    {"params",
                     {{"alpha", params.alpha},
                      {"beta", params.beta},
                      {"gamma", params.gamma},
                      {"delta", params.delta},
                      {"lambda", params.lambda}}},
                    {"rows", rows}};
        emit(out.dump(2) + "\n", output);
    } else {
        emit(csv.str(), output);
    }
    return 0;
}

int cmd_verify_catalog(double k1, double k2, double tol, double e_offset, int grid_points,
                       const std::string& format, const std::string& output) {
    if (grid_points < 2 || tol <= 0) {
        std::cerr << "glame: --grid-points must be >= 2 and --tol positive\n";
        return kExitUsage;
    }
    ModulusHandle mod(k1, k2);
    const int n = glame_catalog_size();
    int passed = 0;
    json entries = json::array();
    std::ostringstream csv;
    csv << "alpha,beta,gamma,delta,lambda,factors,energy,residual,pass\n";
    for (int i = 0; i < n; ++i) {
        glame_catalog_entry e;
        check(glame_catalog_get(i, &e), "catalog");
        double energy, residual;
        check(glame_catalog_energy(mod.m, i, &energy), "energy");
        check(glame_catalog_residual(mod.m, i, e_offset, grid_points, &residual), "residual");
        const bool ok = residual < tol;
        if (ok) ++passed;
        if (format == "json") {
            entries.push_back({{"alpha", e.alpha},
                               {"beta", e.beta},
                               {"gamma", e.gamma},
                               {"delta", e.delta},
                               {"lambda", e.lambda},
                               {"factors", e.factors_str},
                               {"energy", energy},
                               {"residual", residual},
                               {"pass", ok}});
        } else {
            csv << e.alpha << ',' << e.beta << ',' << e.gamma << ',' << e.delta << ',' << e.lambda
                << ',' << e.factors_str << ',' << fmt(energy) << ',' << fmt(residual) << ','
                << (ok ? "pass" : "FAIL") << '\n';
        }
    }
    if (format == "json") {
        json out = {{"k1", k1},        {"k2", k2},   {"tolerance", tol},
                    {"e_offset", e_offset}, {"passed", passed}, {"total", n},
                    {"entries", entries}};
        emit(out.dump(2) + "\n", output);
    } else {
        csv << passed << "/" << n << " entries passed (tol=" << fmt(tol) << ")\n";
        emit(csv.str(), output);
    }
    return passed == n ? 0 : kExitVerifyFailed;
}

int cmd_spectrum(double k1, double k2, const glame_params& params, const std::string& cls,
                 const std::string& transform_name, int n_trunc, int count,
                 const std::string& format, const std::string& output) {
    if (count < 1 || n_trunc < 5) {
        std::cerr << "glame: --count must be >= 1 and --N >= 5\n";
        return kExitUsage;
    }
    ModulusHandle mod(k1, k2);
    glame_transform t = GLAME_TRANSFORM_STANDARD;
    if (transform_name == "d1-shifted") t = GLAME_TRANSFORM_D1_SHIFTED;
    else if (transform_name == "d2-shifted") t = GLAME_TRANSFORM_D2_SHIFTED;
    else if (transform_name != "standard") {
        std::cerr << "glame: unknown transform '" << transform_name << "'\n";
        return kExitUsage;
    }
    std::vector<int> classes;
    if (cls == "all") {
        classes = {0, 1, 2, 3};
    } else {
        bool found = false;
        for (int i = 0; i < 4; ++i)
            if (cls == kClassNames[i]) {
                classes = {i};
                found = true;
            }
        if (!found) {
            std::cerr << "glame: unknown class '" << cls << "'\n";
            return kExitUsage;
        }
    }
    json rows = json::array();
    std::ostringstream csv;
    csv << "class,index,energy\n";
    for (int c : classes) {
        std::vector<double> e(count);
        const glame_status st = glame_hill_energies(
            mod.m, &params, static_cast<glame_fourier_class>(c), t, n_trunc, count, e.data());
        if (st != GLAME_OK) fail(st, std::string("spectrum ") + kClassNames[c]);
        for (int i = 0; i < count; ++i) {
            if (format == "json") {
                rows.push_back({{"class", kClassNames[c]}, {"index", i}, {"energy", e[i]}});
            } else {
                csv << kClassNames[c] << ',' << i << ',' << fmt(e[i]) << '\n';
            }
        }
    }
    if (format == "json") {
        json out = {{"k1", k1},
                    {"k2", k2},
                    {"params",
                     {{"alpha", params.alpha},
                      {"beta", params.beta},
                      {"gamma", params.gamma},
                      {"delta", params.delta},
                      {"lambda", params.lambda}}},
                    {"transform", transform_name},
                    {"truncation", n_trunc},
                    {"rows", rows}};
        emit(out.dump(2) + "\n", output);
    } else {
        emit(csv.str(), output);
    }
    return 0;
}

int cmd_enumerate(const std::string& route_name, int box_lo, int box_hi,
                  const std::string& format, const std::string& output) {
    glame_enum_route route;
    if (route_name == "fourier") route = GLAME_ROUTE_FOURIER;
    else if (route_name == "series") route = GLAME_ROUTE_SERIES;
    else {
        std::cerr << "glame: unknown route '" << route_name << "' (fourier|series)\n";
        return kExitUsage;
    }
    std::vector<glame_poly_solution> rows(64);
    size_t count = 0;
    check(glame_enumerate(route, box_lo, box_hi, rows.data(), rows.size(), &count), "enumerate");
    rows.resize(count);
    if (format == "json") {
        json sols = json::array();
        for (const auto& r : rows) {
            sols.push_back({{"alpha", r.alpha},
                            {"beta", r.beta},
                            {"gamma", r.gamma},
                            {"delta", r.delta},
                            {"lambda", r.lambda},
                            {"e0", r.e0},
                            {"e1", r.e1},
                            {"e2", r.e2},
                            {"factors", r.factors_str},
                            {"route", r.route}});
        }
        json out = {{"route", route_name}, {"count", count}, {"solutions", sols}};
        emit(out.dump(2) + "\n", output);
    } else {
        std::ostringstream csv;
        csv << "alpha,beta,gamma,delta,lambda,e0,e1,e2,factors,route\n";
        for (const auto& r : rows) {
            csv << r.alpha << ',' << r.beta << ',' << r.gamma << ',' << r.delta << ',' << r.lambda
                << ',' << r.e0 << ',' << r.e1 << ',' << r.e2 << ',' << r.factors_str << ','
                << r.route << '\n';
        }
        emit(csv.str(), output);
    }
    return 0;
}

int cmd_catalog(const std::string& format, const std::string& output) {
    if (format == "json") {
        json entries = json::array();
        for (int i = 0; i < glame_catalog_size(); ++i) {
            glame_catalog_entry e;
            check(glame_catalog_get(i, &e), "catalog");
            entries.push_back({{"alpha", e.alpha},
                               {"beta", e.beta},
                               {"gamma", e.gamma},
                               {"delta", e.delta},
                               {"lambda", e.lambda},
                               {"e0", e.e0},
                               {"e1", e.e1},
                               {"e2", e.e2},
                               {"factors", e.factors_str}});
        }
        json out = {{"count", glame_catalog_size()}, {"entries", entries}};
        emit(out.dump(2) + "\n", output);
    } else {
        char buf[2048];
        check(glame_catalog_csv(buf, sizeof buf), "catalog");
        emit(buf, output);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Jacobi functions and the spectral problem of the "
                 "associated doubly periodic potential"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    double k1 = 0.8, k2 = 0.3;
    std::string grid_text = "0:5:11";
    std::string params_text = "0,0,0,0,0";
    std::string format = "csv";
    std::string output;
    double tol = 1e-10, e_offset = 0.0;
    int grid_points = 1001;
    std::string cls = "all", transform_name = "standard", route_name = "fourier";
    int n_trunc = 64, count = 4, box_lo = 0, box_hi = 30;

    auto add_common = [&](CLI::App* sub, bool with_modulus) {
        if (with_modulus) {
            sub->add_option("--k1", k1, "first modulus (0 <= k2 <= k1 <= 1)");
            sub->add_option("--k2", k2, "second modulus");
        }
        sub->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", output, "write to file instead of stdout");
    };

    auto* eval = app.add_subcommand("eval", "tabulate s, c, d1, d2 and the potential");
    add_common(eval, true);
    eval->add_option("--grid", grid_text, "start:stop:count");
    eval->add_option("--params", params_text, "alpha,beta,gamma,delta,lambda");

    auto* verify = app.add_subcommand("verify-catalog",
                                      "check all fifteen product eigenpairs by residual");
    add_common(verify, true);
    verify->add_option("--tol", tol, "residual tolerance");
    verify->add_option("--e-offset", e_offset, "perturb every eigenvalue (diagnostic)");
    verify->add_option("--grid-points", grid_points, "points per period");

    auto* spectrum = app.add_subcommand("spectrum", "truncated-recurrence characteristic energies");
    add_common(spectrum, true);
    spectrum->add_option("--params", params_text, "alpha,beta,gamma,delta,lambda");
    spectrum->add_option("--class", cls, "even_pi|odd_pi|odd_2pi|even_2pi|all");
    spectrum->add_option("--transform", transform_name, "standard|d1-shifted|d2-shifted");
    spectrum->add_option("--N", n_trunc, "starting truncation");
    spectrum->add_option("--count", count, "energies per class");

    auto* enumerate = app.add_subcommand("enumerate", "find every product eigenpair");
    add_common(enumerate, false);
    enumerate->add_option("--route", route_name, "fourier|series");
    enumerate->add_option("--box-lo", box_lo, "parameter search box lower bound");
    enumerate->add_option("--box-hi", box_hi, "parameter search box upper bound");

    auto* cat = app.add_subcommand("catalog", "print the fifteen-row eigenpair table");
    add_common(cat, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (eval->parsed())
        return cmd_eval(k1, k2, grid_text, parse_params(params_text), format, output);
    if (verify->parsed())
        return cmd_verify_catalog(k1, k2, tol, e_offset, grid_points, format, output);
    if (spectrum->parsed())
        return cmd_spectrum(k1, k2, parse_params(params_text), cls, transform_name, n_trunc,
                            count, format, output);
    if (enumerate->parsed()) return cmd_enumerate(route_name, box_lo, box_hi, format, output);
    if (cat->parsed()) return cmd_catalog(format, output);
    return kExitUsage;
}
