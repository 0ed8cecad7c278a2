// entwit: bipartite entanglement-detection toolkit
// entwit.cpp — command-line front end.
//
// Subcommands: analyze, witness, scan, threshold, gen. Exit codes: analyze
// returns 0 (nothing detected), 1 (entanglement detected), 2 (input error);
// every other subcommand returns 0 on success and 2 on any error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entwit/criteria.hpp"
#include "entwit/maps.hpp"
#include "entwit/matrix_io.hpp"
#include "entwit/scan.hpp"
#include "entwit/threshold.hpp"
#include "entwit/witness.hpp"

namespace {

using namespace entwit;

Witness load_witness_file(const std::string& path) {
    MatrixFile mf = read_matrix_file(path);
    validate_kind(mf, "witness");
    Witness w;
    w.mat = hermitize(mf.mat);
    w.dims = mf.dims;
    w.origin = "file";
    w.min_eig = min_eigenvalue(w.mat);
    return w;
}

// Map spec grammar: a witness matrix file path, or "tang:<params>" where
// params are comma-separated "u=<v>" / "eps=<v>" pairs or positional u[,eps].
LinearMap parse_map_spec(const std::string& spec) {
    if (spec.rfind("tang:", 0) == 0) {
        double u = -1.0, eps = -1.0;
        int positional = 0;
        std::istringstream parts(spec.substr(5));
        std::string token;
        while (std::getline(parts, token, ',')) {
            const auto eq = token.find('=');
            if (eq != std::string::npos) {
                const std::string key = token.substr(0, eq);
                const double val = std::stod(token.substr(eq + 1));
                if (key == "u")
                    u = val;
                else if (key == "eps")
                    eps = val;
                else
                    throw ParseError("tang spec: unknown parameter \"" + key +
                                     "\" (expected u or eps)");
            } else {
                const double val = std::stod(token);
                if (positional == 0)
                    u = val;
                else if (positional == 1)
                    eps = val;
                else
                    throw ParseError("tang spec: too many positional parameters");
                ++positional;
            }
        }
        if (u < 0.0) throw ParseError("tang spec: u missing (use tang:<u>[,<eps>])");
        return tang_map(u, eps);
    }
    return from_witness(load_witness_file(spec));
}

struct Detector {
    std::string name;
    std::function<double(const DensityMatrix&)> diagnostic;  // negative side = detected
};

// Detector grammar: realign | ppt | witness:<file> | map:<spec> | tang:<params>.
// The diagnostic is signed so that detection is the negative side; realign uses
// 1 − ‖R(ρ)‖ for the same orientation.
Detector parse_detector_spec(const std::string& spec) {
    if (spec == "realign")
        return {"realign",
                [](const DensityMatrix& rho) { return 1.0 - realignment_check(rho).value; }};
    if (spec == "ppt")
        return {"ppt", [](const DensityMatrix& rho) { return ppt_check(rho).min_eig; }};
    if (spec.rfind("witness:", 0) == 0) {
        auto w = std::make_shared<Witness>(load_witness_file(spec.substr(8)));
        return {"witness " + spec.substr(8),
                [w](const DensityMatrix& rho) { return evaluate(*w, rho); }};
    }
    if (spec.rfind("map:", 0) == 0) {
        auto map = std::make_shared<LinearMap>(parse_map_spec(spec.substr(4)));
        return {spec, [map](const DensityMatrix& rho) {
                    return detection_value_auto(*map, rho).lambda_min;
                }};
    }
    if (spec.rfind("tang:", 0) == 0) {
        auto map = std::make_shared<LinearMap>(parse_map_spec(spec));
        return {spec, [map](const DensityMatrix& rho) {
                    return detection_value_auto(*map, rho).lambda_min;
                }};
    }
    throw ParseError("detector spec \"" + spec +
                     "\": expected realign | ppt | witness:<file> | map:<spec> | "
                     "tang:<u>[,<eps>]");
}

void parse_range(const std::string& range, double& lo, double& hi, int& steps) {
    std::istringstream in(range);
    std::string a, b, c;
    if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c))
        throw ParseError("range \"" + range + "\": expected lo:hi:steps");
    try {
        lo = std::stod(a);
        hi = std::stod(b);
        steps = std::stoi(c);
    } catch (const std::exception&) {
        throw ParseError("range \"" + range + "\": non-numeric field");
    }
}

DensityMatrix load_density_file(const std::string& path) {
    MatrixFile mf = read_matrix_file(path);
    validate_kind(mf, "density");
    return {hermitize(mf.mat), mf.dims};
}

int cmd_analyze(const std::string& input, const std::vector<std::string>& witness_files,
                const std::vector<std::string>& map_specs) {
    const DensityMatrix rho = load_density_file(input);
    std::cout << std::setprecision(12);
    std::cout << "dims " << rho.dims.m << " " << rho.dims.n << "\n";
    bool detected = false;

    const CriterionResult re = realignment_check(rho);
    detected |= re.entangled;
    std::cout << "realign_norm " << re.value << " detects " << (re.entangled ? 1 : 0)
              << "\n";
    const CriterionResult pt = ppt_check(rho);
    detected |= pt.entangled;
    std::cout << "ppt_min_eig " << pt.min_eig << " ppt_norm " << pt.value << " detects "
              << (pt.entangled ? 1 : 0) << "\n";

    // Universal self-witnesses of the input state and their maps.
    for (const auto* method : {"thm1", "thm2"}) {
        const Witness w =
            std::string(method) == "thm1" ? build_thm1(rho) : build_thm2(rho);
        const double tr = evaluate(w, rho);
        const bool fired = tr < -kWitnessTol;
        detected |= fired;
        std::cout << method << "_trace " << tr << " detects " << (fired ? 1 : 0) << "\n";
        const MapDetectionReport det = detection_value_auto(from_witness(w), rho);
        detected |= det.entangled;
        std::cout << method << "_map_lambda_min " << det.lambda_min << " detects "
                  << (det.entangled ? 1 : 0) << "\n";
    }

    for (const auto& path : witness_files) {
        const Witness w = load_witness_file(path);
        const double tr = evaluate(w, rho);
        const bool fired = tr < -kWitnessTol;
        detected |= fired;
        std::cout << "witness " << path << " trace " << tr << " detects " << (fired ? 1 : 0)
                  << "\n";
    }
    for (const auto& spec : map_specs) {
        const LinearMap map = parse_map_spec(spec);
        const MapDetectionReport det = detection_value_auto(map, rho);
        detected |= det.entangled;
        std::cout << "map " << spec << " lambda_min " << det.lambda_min << " detects "
                  << (det.entangled ? 1 : 0) << "\n";
    }

    std::cout << "verdict " << (detected ? "entangled" : "undetected") << "\n";
    return detected ? 1 : 0;
}

int cmd_witness(const std::string& input, const std::string& method, bool do_optimize,
                std::uint64_t seed, const std::string& out) {
    const DensityMatrix rho = load_density_file(input);
    Witness w;
    if (method == "thm1")
        w = build_thm1(rho);
    else if (method == "thm2")
        w = build_thm2(rho);
    else if (method == "projection")
        w = build_projection(rho, seed);
    else
        throw ParseError("witness method \"" + method +
                         "\": expected thm1 | thm2 | projection");
    if (do_optimize) w = optimize(w, seed);

    std::ostringstream comment;
    comment << std::setprecision(17);
    comment << "witness method=" << w.origin;
    if (do_optimize) comment << "\nepsilon " << w.opt_epsilon;
    comment << "\nsv_min " << w.sv_min << " raw_defect " << w.herm_defect_raw;
    write_matrix_file(out, w.mat, w.dims, comment.str());

    std::cout << std::setprecision(12);
    std::cout << "origin " << w.origin << "\n";
    std::cout << "trace_on_source " << evaluate(w, rho) << "\n";
    std::cout << "min_eig " << w.min_eig << "\n";
    std::cout << "sv_min " << w.sv_min << " raw_defect " << w.herm_defect_raw << "\n";
    if (do_optimize) std::cout << "epsilon " << w.opt_epsilon << "\n";
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_scan(const ScanOptions& opt, const std::string& out) {
    ScanSummary summary;
    if (out.empty()) {
        summary = run_scan(opt, std::cout);
    } else {
        std::ofstream file(out);
        if (!file) throw Error(out + ": cannot open file for writing");
        summary = run_scan(opt, file);
        if (!file) throw Error(out + ": write failed");
        std::cout << "rows " << summary.rows << " detections " << summary.detections
                  << "\n";
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

int cmd_threshold(const std::string& family, const std::string& detector_spec, double lo,
                  double hi, double tol, double b) {
    const Detector det = parse_detector_spec(detector_spec);
    const auto diagnostic = [&](double p) {
        return det.diagnostic(scan_family_state(family, p, b));
    };
    const ThresholdResult r = bisect_threshold(diagnostic, lo, hi, tol);
    std::cout << std::setprecision(12);
    std::cout << "family " << family << " detector " << det.name << "\n";
    std::cout << "p_star " << r.p_star << "\n";
    std::cout << "diagnostic " << r.diagnostic << "\n";
    std::cout << "iterations " << r.iterations << "\n";
    return 0;
}

int cmd_gen(const std::string& family, double f, double b, double p, int m, int n,
            std::uint64_t seed, const std::string& out) {
    DensityMatrix rho;
    std::ostringstream comment;
    comment << std::setprecision(17);
    if (family == "werner") {
        rho = werner_2x2(f);
        comment << "state werner f=" << f;
    } else if (family == "upb") {
        rho = upb_tiles_bes();
        comment << "state upb";
    } else if (family == "horodecki") {
        rho = horodecki_2x4(b);
        comment << "state horodecki b=" << b;
    } else if (family == "random") {
        rho = random_density({m, n}, seed);
        comment << "state random dims=" << m << "x" << n << " seed=" << seed;
    } else if (family == "random-ppt") {
        rho = random_ppt_symmetric({m, n}, seed);
        comment << "state random-ppt dims=" << m << "x" << n << " seed=" << seed;
    } else if (family == "product") {
        rho = random_pure_product({m, n}, seed);
        comment << "state product dims=" << m << "x" << n << " seed=" << seed;
    } else {
        throw ParseError("gen family \"" + family +
                         "\": expected werner | upb | horodecki | random | random-ppt | "
                         "product");
    }
    if (p < 1.0) {
        rho = noisy_mixture(rho, p);
        comment << " p=" << p;
    }
    write_matrix_file(out, rho.mat, rho.dims, comment.str());
    std::cout << "wrote " << out << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entwit: bipartite entanglement-detection toolkit"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand(
        "analyze", "Run every detector on a state file; exit 1 when entanglement is found");
    std::string an_input;
    std::vector<std::string> an_witnesses, an_maps;
    analyze->add_option("input", an_input, "density matrix file")->required();
    analyze->add_option("--witness", an_witnesses, "extra witness matrix file (repeatable)");
    analyze->add_option("--map", an_maps,
                        "extra map spec: witness file or tang:<u>[,<eps>] (repeatable)");

    // witness
    auto* witness = app.add_subcommand("witness", "Build a witness from a state file");
    std::string w_input, w_method = "thm1", w_out;
    bool w_optimize = false;
    std::uint64_t w_seed = 7;
    witness->add_option("input", w_input, "density matrix file")->required();
    witness->add_option("--method", w_method, "thm1 | thm2 | projection (default thm1)");
    witness->add_flag("--optimize", w_optimize, "subtract the product-expectation minimum");
    witness->add_option("--seed", w_seed, "optimizer seed");
    witness->add_option("--out", w_out, "output witness file")->required();

    // scan
    auto* scan = app.add_subcommand("scan", "Sweep a state family and emit CSV rows");
    std::string s_family, s_range = "0:1:101", s_witness, s_map, s_out;
    double s_b = 0.218;
    int s_samples = 10000;
    std::uint64_t s_seed = 7;
    scan->add_option("--family", s_family,
                     "werner | upb-noisy | horodecki | horodecki-noisy | random-ppt")
        ->required();
    scan->add_option("--range", s_range, "lo:hi:steps grid (default 0:1:101)");
    scan->add_option("--b", s_b, "fixed b for horodecki-noisy (default 0.218)");
    scan->add_option("--samples", s_samples, "sample count for random-ppt (default 10000)");
    scan->add_option("--seed", s_seed, "sampler seed");
    scan->add_option("--witness", s_witness, "witness matrix file column");
    scan->add_option("--map", s_map, "map spec column: witness file or tang:<u>[,<eps>]");
    scan->add_option("--out", s_out, "output CSV file (default stdout)");

    // threshold
    auto* threshold =
        app.add_subcommand("threshold", "Bisect a detection threshold along a family");
    std::string t_family, t_detector;
    double t_lo = 0.0, t_hi = 1.0, t_tol = 1e-5, t_b = 0.218;
    threshold->add_option("--family", t_family,
                          "werner | upb-noisy | horodecki | horodecki-noisy")
        ->required();
    threshold
        ->add_option("--detector", t_detector,
                     "realign | ppt | witness:<file> | map:<spec> | tang:<u>[,<eps>]")
        ->required();
    threshold->add_option("--lo", t_lo, "lower endpoint (default 0)");
    threshold->add_option("--hi", t_hi, "upper endpoint (default 1)");
    threshold->add_option("--tol", t_tol, "interval tolerance (default 1e-5)");
    threshold->add_option("--b", t_b, "fixed b for horodecki-noisy (default 0.218)");

    // gen
    auto* gen = app.add_subcommand("gen", "Write a bundled or random state to a file");
    std::string g_family, g_out;
    double g_f = 0.0, g_b = 0.5, g_p = 1.0;
    int g_m = 3, g_n = 3;
    std::uint64_t g_seed = 7;
    gen->add_option("--family", g_family,
                    "werner | upb | horodecki | random | random-ppt | product")
        ->required();
    gen->add_option("--f", g_f, "werner parameter in [-1, 1]");
    gen->add_option("--b", g_b, "horodecki parameter in (0, 1)");
    gen->add_option("--p", g_p, "mix with Id/d: p*rho + (1-p)*Id/d (default 1 = no mixing)");
    gen->add_option("--m", g_m, "A-side dimension for random families (default 3)");
    gen->add_option("--n", g_n, "B-side dimension for random families (default 3)");
    gen->add_option("--seed", g_seed, "sampler seed");
    gen->add_option("--out", g_out, "output state file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help and friends stay 0; bad usage is an input error
    }

    try {
        if (analyze->parsed()) return cmd_analyze(an_input, an_witnesses, an_maps);
        if (witness->parsed()) return cmd_witness(w_input, w_method, w_optimize, w_seed, w_out);
        if (scan->parsed()) {
            ScanOptions opt;
            opt.family = s_family;
            parse_range(s_range, opt.lo, opt.hi, opt.steps);
            opt.b = s_b;
            opt.samples = s_samples;
            opt.seed = s_seed;
            if (!s_witness.empty()) opt.witness = load_witness_file(s_witness);
            if (!s_map.empty()) opt.map = parse_map_spec(s_map);
            return cmd_scan(opt, s_out);
        }
        if (threshold->parsed())
            return cmd_threshold(t_family, t_detector, t_lo, t_hi, t_tol, t_b);
        if (gen->parsed()) return cmd_gen(g_family, g_f, g_b, g_p, g_m, g_n, g_seed, g_out);
    } catch (const BracketError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "endpoint diagnostics: lo " << e.lo << ", hi " << e.hi << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: require_subcommand(1) guarantees one branch above
}
