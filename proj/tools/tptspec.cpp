// tptspec: classify couplings, solve single- and double-well spectra,
// emit wavefunction samples and finite-difference cross-checks.
//
// Angles are taken in units of pi (--theta-s 0.25 means pi/4), energies
// are always reported as k/alpha or kappa/alpha.

#include "tpt/doublewell.hpp"
#include "tpt/eigenfn.hpp"
#include "tpt/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace tpt;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr const char* kVersion = "0.1.0";

struct Options {
    double gs = 0.0, gc = 0.0, alpha = 1.0;
    double theta_s = 0.0, theta_c = 0.0; // units of pi
    bool has_theta_s = false, has_theta_c = false;
    double scale_term = 0.0;
    bool has_scale = false;
    double D = 0.0;
    bool has_D = false;
    bool ir_s = false, ir_c = false;
    int table1 = 0;
    std::string preset;
    double window = 20.0, grid_step = 1e-3, tol = 1e-10, kappa_cap = 500.0;
    std::string format = "csv", out;
    int level = 0, count = 4, samples = 2001;
    double margin = 1e-3;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--gs", o.gs, "sin-end coupling g_s");
    cmd->add_option("--gc", o.gc, "cos-end coupling g_c");
    cmd->add_option("--alpha", o.alpha, "inverse length scale");
    cmd->add_option("--theta-s", o.theta_s, "sin-end phase / pi")
        ->each([&o](const std::string&) { o.has_theta_s = true; });
    cmd->add_option("--theta-c", o.theta_c, "cos-end phase / pi")
        ->each([&o](const std::string&) { o.has_theta_c = true; });
    cmd->add_option("--scale-term", o.scale_term,
                    "epsilon (alpha L)^(2 nu) of the weak-medium end")
        ->each([&o](const std::string&) { o.has_scale = true; });
    cmd->add_option("--D", o.D, "critical-line log-slope datum")
        ->each([&o](const std::string&) { o.has_D = true; });
    cmd->add_flag("--ir-s", o.ir_s, "IR fixed point at the sin end");
    cmd->add_flag("--ir-c", o.ir_c, "IR fixed point at the cos end");
    cmd->add_option("--window", o.window, "positive-branch k/alpha ceiling");
    cmd->add_option("--grid-step", o.grid_step, "scan step");
    cmd->add_option("--tol", o.tol, "bisection tolerance");
    cmd->add_option("--kappa-cap", o.kappa_cap, "negative-branch ceiling");
    cmd->add_option("--table1", o.table1, "preset: published table column 1|2|3")
        ->check(CLI::Range(1, 3));
    cmd->add_option("--preset", o.preset, "named preset");
    cmd->add_option("--format", o.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "output path (default stdout)");
}

void apply_presets(Options& o, bool doublewell) {
    const double nus2pi = -0.25 - 4.0 * kPi * kPi;
    if (o.table1 == 1) {
        o.gs = nus2pi; o.gc = 12.0;
        o.theta_s = 0.25; o.has_theta_s = true;
    } else if (o.table1 == 2) {
        o.gs = nus2pi; o.gc = 0.56;
        o.theta_s = 0.25; o.has_theta_s = true;
        o.scale_term = 0.6; o.has_scale = true;
    } else if (o.table1 == 3) {
        o.gs = nus2pi; o.gc = -0.25 - kPi * kPi;
        o.theta_s = 1.0 / 3.0; o.has_theta_s = true;
        o.theta_c = -0.125; o.has_theta_c = true;
    }
    if (o.preset.empty()) return;
    auto g_of_nu = [](double nu) { return nu * nu - 0.25; };
    if (o.preset == "gray") {
        o.gs = g_of_nu(0.4); o.gc = g_of_nu(2.5);
    } else if (o.preset == "scalewell" && doublewell) {
        o.gs = g_of_nu(0.6); o.gc = g_of_nu(0.4);
        o.scale_term = -1.1; o.has_scale = true;
    } else if (o.preset == "phasewell" && doublewell) {
        o.gs = g_of_nu(0.7); o.gc = nus2pi;
        o.theta_c = 0.25; o.has_theta_c = true;
    } else if (o.preset == "exceptional03") {
        o.gs = o.gc = g_of_nu(0.3);
    } else if (o.preset == "exceptional07") {
        o.gs = o.gc = g_of_nu(0.7);
    } else {
        throw domain_error("unknown preset: " + o.preset);
    }
}

EndDatum datum_for(const Options& o, bool sin_end) {
    double g = sin_end ? o.gs : o.gc;
    NuValue nu = nu_from_g(g);
    bool has_theta = sin_end ? o.has_theta_s : o.has_theta_c;
    double theta = (sin_end ? o.theta_s : o.theta_c) * kPi;
    bool ir = sin_end ? o.ir_s : o.ir_c;
    switch (regime_of(g)) {
    case CouplingRegime::StrongRepulsive:
        return EndDatum::uv();
    case CouplingRegime::WeakMedium:
        if (ir) return EndDatum::ir();
        if (o.has_scale) {
            // only one weak-medium end may carry the scale; prefer cos
            if (!sin_end || regime_of(o.gc) != CouplingRegime::WeakMedium) {
                int eps = o.scale_term < 0 ? -1 : 1;
                double L = std::pow(std::abs(o.scale_term),
                                    1.0 / (2.0 * nu.magnitude)) / o.alpha;
                return EndDatum::scale(L, eps);
            }
        }
        return EndDatum::uv();
    case CouplingRegime::CriticalBF:
        return o.has_D ? EndDatum::critical(o.D) : EndDatum::uv();
    case CouplingRegime::StrongAttractive:
        if (!has_theta)
            throw domain_error(std::string("strong-attractive ") +
                               (sin_end ? "sin" : "cos") +
                               " end needs --theta-" + (sin_end ? "s" : "c"));
        return EndDatum::phase(theta);
    }
    throw domain_error("datum_for: unreachable");
}

ScanConfig scan_of(const Options& o) {
    ScanConfig cfg;
    cfg.window_max = o.window;
    cfg.grid_step = o.grid_step;
    cfg.bisect_tol = o.tol;
    cfg.kappa_cap = o.kappa_cap;
    return cfg;
}

json manifest_of(const std::string& cmd, const Options& o) {
    json m;
    m["command"] = cmd;
    m["version"] = kVersion;
    m["params"] = {{"gs", o.gs}, {"gc", o.gc}, {"alpha", o.alpha},
                   {"theta_s", o.theta_s}, {"theta_c", o.theta_c},
                   {"scale_term", o.has_scale ? o.scale_term : 0.0},
                   {"D", o.D}, {"ir_s", o.ir_s}, {"ir_c", o.ir_c},
                   {"table1", o.table1}, {"preset", o.preset},
                   {"level", o.level}, {"count", o.count}};
    m["scan"] = {{"window", o.window}, {"grid_step", o.grid_step},
                 {"tol", o.tol}, {"kappa_cap", o.kappa_cap}};
    std::time_t t = std::time(nullptr);
    char ts[32];
    std::strftime(ts, sizeof ts, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    m["timestamp"] = ts;
    return m;
}

void emit(const Options& o, const json& manifest, const std::string& csv,
          const json& payload) {
    // file outputs stay byte-identical across reruns: the timestamped
    // manifest goes to the side file, never into the data file
    if (o.out.empty()) {
        if (o.format == "json") {
            json doc = payload;
            doc["manifest"] = manifest;
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "# manifest " << manifest.dump() << "\n" << csv;
        }
    } else {
        std::ofstream f(o.out);
        if (!f) throw domain_error("cannot open output file: " + o.out);
        if (o.format == "json") f << payload.dump(2) << "\n";
        else f << csv;
        std::ofstream mf(o.out + ".manifest.json");
        mf << manifest.dump(2) << "\n";
    }
}

const char* sign_name(EnergySign s) {
    return s == EnergySign::Positive ? "pos" : "neg";
}

json level_json(const EnergyLevel& lv) {
    json j = {{"index", lv.index}, {"sign", sign_name(lv.point.sign)},
              {"value", lv.point.magnitude},
              {"residual", lv.residual_at_root},
              {"threshold", lv.threshold_flag}};
    if (lv.parity)
        j["parity"] = *lv.parity == Parity::Even ? "even" : "odd";
    return j;
}

int cmd_classify(const Options& o) {
    PotentialSpec spec{o.alpha, o.gs, o.gc};
    auto [rs, rc] = classify(spec);
    auto name = [](CouplingRegime r) {
        switch (r) {
        case CouplingRegime::StrongRepulsive: return "strong-repulsive";
        case CouplingRegime::WeakMedium: return "weak-medium";
        case CouplingRegime::CriticalBF: return "critical";
        default: return "strong-attractive";
        }
    };
    auto nu_json = [](double g) {
        NuValue nu = nu_from_g(g);
        return json{{"magnitude", nu.magnitude},
                    {"imaginary", nu.kind == NuKind::Imaginary}};
    };
    json payload = {{"sin_end", {{"g", o.gs}, {"regime", name(rs)},
                                 {"nu", nu_json(o.gs)}}},
                    {"cos_end", {{"g", o.gc}, {"regime", name(rc)},
                                 {"nu", nu_json(o.gc)}}}};
    std::string csv = "end,g,regime,nu,imaginary\n";
    NuValue ns = nu_from_g(o.gs), nc = nu_from_g(o.gc);
    csv += "sin," + fmt(o.gs) + "," + name(rs) + "," + fmt(ns.magnitude) + "," +
           (ns.kind == NuKind::Imaginary ? "1" : "0") + "\n";
    csv += "cos," + fmt(o.gc) + "," + name(rc) + "," + fmt(nc.magnitude) + "," +
           (nc.kind == NuKind::Imaginary ? "1" : "0") + "\n";
    emit(o, manifest_of("classify", o), csv, payload);
    return 0;
}

SpectrumReport run_spectrum(const Options& o) {
    PotentialSpec spec{o.alpha, o.gs, o.gc};
    RenormData rd{datum_for(o, true), datum_for(o, false)};
    return solve_spectrum(spec, rd, scan_of(o));
}

int cmd_spectrum(const Options& o) {
    SpectrumReport rep = run_spectrum(o);
    std::string csv = "index,sign,value,residual\n";
    json jl = json::array(), je = json::array();
    int row = 0;
    for (const auto& lv : rep.levels) {
        csv += std::to_string(row++) + "," + sign_name(lv.point.sign) + "," +
               fmt(lv.point.magnitude) + "," + fmt(lv.residual_at_root) + "\n";
        jl.push_back(level_json(lv));
    }
    for (const auto& en : rep.efimov_ratios)
        je.push_back({{"ratio", en.ratio}, {"predicted", en.predicted},
                      {"label", en.label}, {"deviation", en.deviation}});
    json payload = {{"levels", jl}, {"efimov", je}};
    emit(o, manifest_of("spectrum", o), csv, payload);
    return 0;
}

int cmd_doublewell(const Options& o) {
    NuValue ns = nu_from_g(o.gs), nc = nu_from_g(o.gc);
    ParitySpectra ps;
    json ordering;
    bool exceptional = std::abs(o.gs - o.gc) < 1e-12 &&
                       regime_of(o.gs) == CouplingRegime::WeakMedium;
    int n_max = std::max(0, int((o.window - 1.0) / 2.0));
    if (exceptional) {
        ps = exceptional_line(ns.magnitude, n_max);
        OrderingReport rep = exceptional_ordering(ns.magnitude, n_max);
        json ord = json::array();
        for (auto p : rep.order)
            ord.push_back(p == Parity::Even ? "even" : "odd");
        ordering = {{"order", ord}, {"anomaly", rep.anomaly},
                    {"expected_nodes", rep.expected_nodes}};
    } else {
        switch (regime_of(o.gc)) {
        case CouplingRegime::StrongRepulsive:
            ps = even_odd_closed(ns.magnitude, nc.magnitude,
                                 o.ir_c ? CosEndPoint::IRc : CosEndPoint::UVc,
                                 n_max);
            break;
        case CouplingRegime::WeakMedium:
            if (o.has_scale)
                ps = even_odd_scale(ns.magnitude, nc.magnitude, o.scale_term,
                                    scan_of(o));
            else
                ps = even_odd_closed(ns.magnitude, nc.magnitude,
                                     o.ir_c ? CosEndPoint::IRc : CosEndPoint::UVc,
                                     n_max);
            break;
        case CouplingRegime::StrongAttractive:
            if (!o.has_theta_c)
                throw domain_error("double well with attractive gc needs --theta-c");
            ps = even_odd_attractive(ns.magnitude, nc.magnitude,
                                     o.theta_c * kPi, scan_of(o));
            break;
        default:
            throw regime_error("double well: unsupported cos-end regime");
        }
    }
    std::string csv = "index,parity,sign,value,residual\n";
    json jl = json::array();
    int row = 0;
    for (const auto& lv : ps.merged()) {
        csv += std::to_string(row++) + "," +
               (lv.parity && *lv.parity == Parity::Odd ? "odd" : "even") + "," +
               sign_name(lv.point.sign) + "," + fmt(lv.point.magnitude) + "," +
               fmt(lv.residual_at_root) + "\n";
        jl.push_back(level_json(lv));
    }
    json payload = {{"levels", jl}};
    if (!ordering.is_null()) payload["ordering"] = ordering;
    emit(o, manifest_of("doublewell", o), csv, payload);
    return 0;
}

int cmd_wavefunction(const Options& o) {
    SpectrumReport rep = run_spectrum(o);
    if (o.level < 0 || o.level >= int(rep.levels.size()))
        throw domain_error("level index out of range (spectrum has " +
                           std::to_string(rep.levels.size()) + " levels)");
    const EnergyLevel& lv = rep.levels[o.level];
    PotentialSpec spec{o.alpha, o.gs, o.gc};
    BoundaryCoefficients bc = coefficients_from_renorm(spec, rep.renorm, lv.point);
    auto grid = clustered_grid(spec, o.margin / o.alpha, o.samples);
    WaveSample ws = psi_eval(spec, bc, lv.point, grid, &rep.renorm.cos_end);
    ws = normalize(spec, ws);
    std::string csv = "x,psi\n";
    json jx = json::array(), jp = json::array();
    for (size_t i = 0; i < ws.x.size(); ++i) {
        csv += fmt(ws.x[i]) + "," + fmt(ws.psi[i]) + "\n";
        jx.push_back(ws.x[i]);
        jp.push_back(ws.psi[i]);
    }
    json payload = {{"level", level_json(lv)}, {"nodes", ws.node_count},
                    {"mask_radius", ws.mask_radius}, {"x", jx}, {"psi", jp}};
    emit(o, manifest_of("wavefunction", o), csv, payload);
    return 0;
}

int cmd_validate(const Options& o) {
    SpectrumReport rep = run_spectrum(o);
    PotentialSpec spec{o.alpha, o.gs, o.gc};
    RegulatedProblem prob = regulate(spec, rep.renorm);
    auto oracle = eigen_low(prob, o.count);
    auto energy = [](const EnergyPoint& p) {
        double e = p.magnitude * p.magnitude;
        return p.sign == EnergySign::Positive ? e : -e;
    };
    json rows = json::array();
    for (int j = 0; j < o.count && j < int(rep.levels.size()); ++j) {
        double es = energy(rep.levels[j].point), eo = energy(oracle[j].point);
        rows.push_back({{"index", j},
                        {"solver", level_json(rep.levels[j])},
                        {"oracle", level_json(oracle[j])},
                        {"rel_delta", std::abs(es - eo) /
                                          std::max(std::abs(es), 1e-30)}});
    }
    json payload = {{"comparison", rows}};
    std::string csv = "index,solver,oracle,rel_delta\n";
    for (const auto& r : rows)
        csv += r["index"].dump() + "," +
               fmt(r["solver"]["value"].get<double>()) + "," +
               fmt(r["oracle"]["value"].get<double>()) + "," +
               fmt(r["rel_delta"].get<double>()) + "\n";
    emit(o, manifest_of("validate", o), csv, payload);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"renormalized trigonometric Poschl-Teller spectra"};
    app.require_subcommand(1);
    Options o;
    auto* c_classify = app.add_subcommand("classify", "coupling regimes");
    auto* c_spectrum = app.add_subcommand("spectrum", "single-well spectrum");
    auto* c_dwell = app.add_subcommand("doublewell", "parity spectra");
    auto* c_wave = app.add_subcommand("wavefunction", "sampled eigenfunction");
    auto* c_validate = app.add_subcommand("validate", "finite-difference check");
    for (auto* c : {c_classify, c_spectrum, c_dwell, c_wave, c_validate})
        add_common(c, o);
    c_wave->add_option("--level", o.level, "level index (energy order)");
    c_wave->add_option("--samples", o.samples, "grid size");
    c_wave->add_option("--margin", o.margin, "edge margin in units of 1/alpha");
    c_validate->add_option("--count", o.count, "levels to compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << json{{"error", e.what()}, {"kind", "validation"}}.dump()
                  << "\n";
        return 2;
    }

    try {
        apply_presets(o, c_dwell->parsed());
        if (c_classify->parsed()) return cmd_classify(o);
        if (c_spectrum->parsed()) return cmd_spectrum(o);
        if (c_dwell->parsed()) return cmd_doublewell(o);
        if (c_wave->parsed()) return cmd_wavefunction(o);
        if (c_validate->parsed()) return cmd_validate(o);
    } catch (const pole_error& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "numerical"}}.dump() << "\n";
        return 3;
    } catch (const convergence_error& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "numerical"}}.dump() << "\n";
        return 3;
    } catch (const branch_error& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "numerical"}}.dump() << "\n";
        return 3;
    } catch (const regime_error& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "validation"}}.dump() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "validation"}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "numerical"}}.dump() << "\n";
        return 3;
    }
    return 2;
}
