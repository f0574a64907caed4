// lioufock: algebra verification, dual-basis export, steady states and spectra
// of quadratic Lindblad models on fermionic / truncated bosonic mode systems.
// All output is a single JSON document; exit 0 = success, 1 = numerical or
// physical failure, 2 = input error.

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <string>

#include "lioufock/dual_basis.hpp"
#include "lioufock/eig.hpp"
#include "lioufock/fock.hpp"
#include "lioufock/json_io.hpp"
#include "lioufock/la.hpp"
#include "lioufock/lindblad.hpp"
#include "lioufock/supermaps.hpp"
#include "lioufock/version.hpp"

namespace {

using lioufock::Cplx;
using lioufock::CMat;
using lioufock::CVec;
using lioufock::ModeSystem;
using lioufock::Statistics;
using nlohmann::json;

void apply_thread_cap() {
    if (const char* env = std::getenv("LIOUVILLE_FOCK_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) omp_set_num_threads(cap);
    }
}

Statistics parse_statistics(const std::string& s) {
    if (s == "fermionic") return Statistics::Fermionic;
    if (s == "bosonic") return Statistics::Bosonic;
    throw std::invalid_argument("statistics must be \"fermionic\" or \"bosonic\"");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return json::parse(in); // parse_error carries the byte position
}

json base_report(const std::string& command) {
    json r;
    r["tool"] = lioufock::kToolName;
    r["version"] = lioufock::kVersion;
    r["command"] = command;
    return r;
}

void emit(json& report, double wall_s, const std::string& out_path) {
    report["wall_time_s"] = wall_s;
    const std::string doc = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << doc;
    }
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

const char* kind_name(lioufock::supermaps::BracketCheck::Kind k) {
    switch (k) {
        case lioufock::supermaps::BracketCheck::MixedBracket: return "lowering_raising";
        case lioufock::supermaps::BracketCheck::LoweringPair: return "lowering_lowering";
        default: return "raising_raising";
    }
}

int cmd_verify_algebra(const std::string& stats_s, int n, int cutoff, double tol,
                       const std::string& out_path) {
    Timer timer;
    const Statistics stats = parse_statistics(stats_s);
    const ModeSystem sys(stats, n, cutoff);
    const auto maps = lioufock::supermaps::adjoint_maps(sys);
    const auto rep = lioufock::supermaps::verify_algebra(maps);

    json r = base_report("verify-algebra");
    r["statistics"] = to_string(stats);
    r["n_modes"] = n;
    if (stats == Statistics::Bosonic) r["cutoff"] = cutoff;
    r["tolerance"] = tol;

    json brackets = json::array();
    for (const auto& b : rep.brackets)
        brackets.push_back(json{{"kind", kind_name(b.kind)},
                                {"i", b.i},
                                {"k", b.k},
                                {"interior", b.interior},
                                {"full", b.full}});
    r["brackets"] = brackets;
    r["max_interior"] = rep.max_interior();
    r["max_full"] = rep.max_full();
    r["left_vacuum"] = rep.left_vacuum;
    r["right_vacuum"] = rep.right_vacuum;
    if (!rep.parity.empty())
        r["parity"] = json{{"bra_fixed", rep.parity[0]},
                           {"ket_fixed", rep.parity[1]},
                           {"map_anticommutation", rep.parity[2]}};

    // the bracket contract is interior-exact for bosons, exact for fermions
    double worst = stats == Statistics::Bosonic ? rep.max_interior() : rep.max_full();
    for (double v : rep.left_vacuum) worst = std::max(worst, v);
    for (double v : rep.right_vacuum) worst = std::max(worst, v);
    for (double v : rep.parity) worst = std::max(worst, v);

    // companion bi-orthonormality check where the truncation margin allows one
    int m_max = stats == Statistics::Fermionic ? 1 : std::min(2, (cutoff - 2) / 2);
    if (m_max >= 1) {
        const auto basis = lioufock::dual_basis::build_dual_basis(maps, m_max);
        const double gdev = lioufock::la::max_abs_diff(
            basis.gram(), lioufock::la::identity(static_cast<int>(basis.indices.size())));
        r["gram"] = json{{"max_index", m_max}, {"deviation", gdev}};
        worst = std::max(worst, gdev);
    } else {
        r["gram"] = json{{"skipped", "cutoff too small for an interior basis (needs cutoff >= 4)"}};
    }

    const bool pass = worst <= tol;
    r["max_gated_residual"] = worst;
    r["pass"] = pass;
    emit(r, timer.seconds(), out_path);
    return pass ? 0 : 1;
}

int cmd_basis(const std::string& stats_s, int n, int cutoff, int m_max, double tol,
              const std::string& out_path) {
    Timer timer;
    const Statistics stats = parse_statistics(stats_s);
    const ModeSystem sys(stats, n, cutoff);
    const auto maps = lioufock::supermaps::adjoint_maps(sys);
    const auto basis = lioufock::dual_basis::build_dual_basis(maps, m_max);
    const CMat gram = basis.gram();
    const double gdev = lioufock::la::max_abs_diff(
        gram, lioufock::la::identity(static_cast<int>(basis.indices.size())));

    json r = base_report("basis");
    r["statistics"] = to_string(stats);
    r["n_modes"] = n;
    if (stats == Statistics::Bosonic) r["cutoff"] = cutoff;
    r["max_index"] = m_max;
    r["tolerance"] = tol;
    r["indices"] = basis.indices;
    r["kets"] = lioufock::io::encode(basis.kets);
    r["bras"] = lioufock::io::encode(basis.bras);
    r["gram"] = lioufock::io::encode(gram);
    r["gram_deviation"] = gdev;
    const bool pass = gdev <= tol;
    r["pass"] = pass;
    emit(r, timer.seconds(), out_path);
    return pass ? 0 : 1;
}

json eigenvalue_list(const CVec& vals, size_t limit) {
    json out = json::array();
    for (size_t i = 0; i < vals.size() && i < limit; ++i)
        out.push_back(lioufock::io::encode(vals[i]));
    return out;
}

int cmd_ness(const std::string& model_path, const std::string& obs_path, double tol,
             const std::string& out_path) {
    Timer timer;
    const json jmodel = load_json_file(model_path);
    const auto model = lioufock::io::parse_model(jmodel);
    const auto result = lioufock::lindblad::ness(model, tol);

    json r = base_report("ness");
    r["input_hash"] = lioufock::io::input_hash(jmodel);
    r["model"] = lioufock::io::model_to_json(model);
    r["eigenvalues"] = eigenvalue_list(result.eigenvalues, result.eigenvalues.size());
    r["spectrum_head"] = eigenvalue_list(result.eigenvalues, 8);
    r["spectral_gap"] = result.spectral_gap;
    r["null_dim"] = result.null_dim;
    r["degenerate"] = result.degenerate;
    r["near_degenerate"] = result.near_degenerate;

    if (result.degenerate) {
        r["null_basis"] = lioufock::io::encode(result.null_basis);
        emit(r, timer.seconds(), out_path);
        std::cerr << "error: steady state is degenerate (null_dim = " << result.null_dim
                  << "), no unique density matrix\n";
        return 1;
    }

    r["residual"] = result.residual;
    r["ness_matrix"] = lioufock::io::encode(result.rho);

    json expectations;
    json occ = json::array();
    for (int j = 1; j <= model.sys.n_modes; ++j)
        occ.push_back(lioufock::io::encode(
            lioufock::lindblad::expectation(lioufock::fock::number_op(model.sys, j), result)));
    expectations["occupation"] = occ;
    if (!obs_path.empty()) {
        const json jobs = load_json_file(obs_path);
        if (!jobs.is_object())
            throw std::invalid_argument("observables file must be an object of named matrices");
        for (const auto& [name, jm] : jobs.items()) {
            const CMat A = lioufock::io::decode_cmat(jm, "observables." + name);
            if (A.rows != model.sys.dim || A.cols != model.sys.dim)
                throw std::invalid_argument("observables." + name +
                                            " must be a dim x dim matrix");
            expectations[name] = lioufock::io::encode(lioufock::lindblad::expectation(A, result));
        }
    }
    r["expectations"] = expectations;
    emit(r, timer.seconds(), out_path);
    return 0;
}

int cmd_spectrum(const std::string& model_path, double tol, const std::string& out_path) {
    Timer timer;
    const json jmodel = load_json_file(model_path);
    const auto model = lioufock::io::parse_model(jmodel);
    const CVec vals = lioufock::lindblad::spectrum(model);
    const auto form = lioufock::lindblad::third_quantize(model, tol);

    json r = base_report("spectrum");
    r["input_hash"] = lioufock::io::input_hash(jmodel);
    r["model"] = lioufock::io::model_to_json(model);
    r["eigenvalues"] = eigenvalue_list(vals, vals.size());

    double scale = 0.0;
    for (const Cplx& v : vals) scale = std::max(scale, std::abs(v));
    double max_re_nonzero = -std::numeric_limits<double>::infinity();
    for (const Cplx& v : vals)
        if (std::abs(v) > tol * std::max(1.0, scale))
            max_re_nonzero = std::max(max_re_nonzero, v.real());
    r["spectral_gap"] = std::isfinite(max_re_nonzero) ? -max_re_nonzero : 0.0;

    auto kernel_json = [](const lioufock::lindblad::QuadraticKernel& k) {
        return json{{"raise_raise", lioufock::io::encode(k.raise_raise)},
                    {"mixed", lioufock::io::encode(k.mixed)},
                    {"lower_lower", lioufock::io::encode(k.lower_lower)},
                    {"constant", lioufock::io::encode(k.constant)}};
    };
    r["third_quantized"] = json{{"unit", kernel_json(form.unit)},
                                {"parity", kernel_json(form.parity)},
                                {"reconstruction_residual", form.reconstruction_residual},
                                {"within_tolerance", form.within_tolerance}};
    emit(r, timer.seconds(), out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    apply_thread_cap();

    CLI::App app{"Fock structure on density-operator space: adjoint-map algebra checks, "
                 "dual bases, quadratic Lindblad steady states and spectra"};
    app.require_subcommand(1);

    std::string stats_s, model_path, obs_path, out_path;
    int n = 1, cutoff = 0, m_max = 1;
    double tol = 1e-10;

    CLI::App* verify = app.add_subcommand("verify-algebra", "check the defining superoperator algebra");
    verify->add_option("--statistics", stats_s, "fermionic or bosonic")->required();
    verify->add_option("--n", n, "number of modes")->required();
    verify->add_option("--cutoff", cutoff, "bosonic per-mode levels");
    verify->add_option("--tolerance", tol, "pass/fail threshold (default 1e-10)");
    verify->add_option("--out", out_path, "write report here instead of stdout");

    CLI::App* basis = app.add_subcommand("basis", "export the dual Fock basis pair");
    basis->add_option("--statistics", stats_s, "fermionic or bosonic")->required();
    basis->add_option("--n", n, "number of modes")->required();
    basis->add_option("--cutoff", cutoff, "bosonic per-mode levels");
    basis->add_option("--max-index", m_max, "largest per-map index (default 1)");
    basis->add_option("--tolerance", tol, "Gram deviation threshold (default 1e-10)");
    basis->add_option("--out", out_path, "write report here instead of stdout");

    CLI::App* ness = app.add_subcommand("ness", "steady state of a quadratic Lindblad model");
    ness->add_option("model", model_path, "model JSON file")->required();
    ness->add_option("--observables", obs_path, "JSON object of named matrices to evaluate");
    ness->add_option("--tolerance", tol, "null-space threshold (default 1e-10)");
    ness->add_option("--out", out_path, "write report here instead of stdout");

    CLI::App* spectrum = app.add_subcommand("spectrum", "full spectrum and quadratic normal form");
    spectrum->add_option("model", model_path, "model JSON file")->required();
    spectrum->add_option("--tolerance", tol, "reconstruction threshold (default 1e-10)");
    spectrum->add_option("--out", out_path, "write report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify_algebra(stats_s, n, cutoff, tol, out_path);
        if (app.got_subcommand(basis)) return cmd_basis(stats_s, n, cutoff, m_max, tol, out_path);
        if (app.got_subcommand(ness)) return cmd_ness(model_path, obs_path, tol, out_path);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(model_path, tol, out_path);
    } catch (const json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2; // no subcommand matched (require_subcommand should prevent this)
}
