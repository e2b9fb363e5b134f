// Command line front end: spectrum tables, thermal sweeps, reduced density
// matrix reports and the self-verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 budget or configuration
// error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kitaev/oracle.hpp"
#include "kitaev/rdm.hpp"
#include "kitaev/spectrum.hpp"
#include "kitaev/states.hpp"
#include "kitaev/thermo.hpp"
#include "kitaev/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

kitaev::LatticeKind parse_kind(const std::string& name) {
    if (name == "two-leg") return kitaev::LatticeKind::TwoLegLadder;
    if (name == "three-leg") return kitaev::LatticeKind::ThreeLegLadder;
    if (name == "torus") return kitaev::LatticeKind::SquareTorus;
    throw CLI::ValidationError("--lattice must be two-leg, three-leg or torus");
}

kitaev::Lattice build_lattice(kitaev::LatticeKind kind, int n) {
    switch (kind) {
        case kitaev::LatticeKind::TwoLegLadder: return kitaev::build_two_leg_ladder(n);
        case kitaev::LatticeKind::ThreeLegLadder: return kitaev::build_three_leg_ladder(n);
        case kitaev::LatticeKind::SquareTorus: return kitaev::build_square_torus(n);
    }
    throw std::logic_error("unreachable");
}

// Writes to the path when given, otherwise to stdout.
void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << content;
}

int thread_count_from_env() {
    const char* raw = std::getenv("KITAEV_NUM_THREADS");
    if (!raw) return 1;
    int n = std::atoi(raw);
    return n < 1 ? 1 : (n > 16 ? 16 : n);
}

struct CommonOptions {
    std::string lattice = "two-leg";
    int n = 2;
    double j = 1.0;
    double k = 1.0;
    std::string output;
};

int run_spectrum(const CommonOptions& opt) {
    kitaev::Lattice lat = build_lattice(parse_kind(opt.lattice), opt.n);
    kitaev::SpectrumHistogram hist = kitaev::enumerate_spectrum(lat, {opt.j, opt.k});

    std::ostringstream csv;
    kitaev::write_histogram_csv(csv, hist);
    emit(opt.output, csv.str());

    auto buckets = hist.buckets();
    std::ostream& info = opt.output.empty() ? std::cerr : std::cout;
    info << "states: " << hist.total_states() << "\n";
    info << "ground energy: " << fmt17(buckets.front().energy)
         << " degeneracy: " << buckets.front().degeneracy << "\n";
    info << "top energy: " << fmt17(buckets.back().energy)
         << " degeneracy: " << buckets.back().degeneracy << "\n";
    return kExitOk;
}

struct ThermoOptions : CommonOptions {
    double beta_min = 1.0;
    double beta_max = 1.0;
    int beta_steps = 1;
};

int run_thermo(const ThermoOptions& opt) {
    if (parse_kind(opt.lattice) != kitaev::LatticeKind::TwoLegLadder)
        throw std::invalid_argument("the thermal sweep covers the two-leg ladder");
    if (opt.beta_steps < 1) throw std::invalid_argument("--beta-steps must be >= 1");
    if (opt.beta_min < 0 || opt.beta_max < opt.beta_min)
        throw std::invalid_argument("need 0 <= beta-min <= beta-max");

    std::vector<kitaev::ThermalPoint> grid;
    for (int i = 0; i < opt.beta_steps; ++i) {
        double beta = opt.beta_steps == 1
                          ? opt.beta_min
                          : opt.beta_min + (opt.beta_max - opt.beta_min) * i / (opt.beta_steps - 1);
        grid.push_back({beta, {opt.j, opt.k}, opt.n, kitaev::LatticeKind::TwoLegLadder});
    }

    std::ostringstream csv;
    kitaev::write_sweep_csv(csv, grid);
    emit(opt.output, csv.str());

    const kitaev::ThermalPoint& last = grid.back();
    std::ostream& info = opt.output.empty() ? std::cerr : std::cout;
    info << "rows: " << grid.size() << "\n";
    info << "entropy split at beta=" << fmt17(last.beta)
         << ": S_s=" << fmt17(kitaev::entropy_vertex_term(last.beta * last.c.j))
         << " S_p=" << fmt17(kitaev::entropy_plaquette_term(last.beta * last.c.k)) << "\n";
    return kExitOk;
}

struct RdmOptions : CommonOptions {
    std::string subsystem = "A";
    double beta = 1.0;
    int rungs = 1;          // size of subsystem C
    std::string units = "bits";
};

int run_rdm(const RdmOptions& opt) {
    if (parse_kind(opt.lattice) != kitaev::LatticeKind::TwoLegLadder)
        throw std::invalid_argument("reduced density matrices cover the two-leg ladder");
    if (opt.units != "bits" && opt.units != "nats")
        throw std::invalid_argument("--units must be bits or nats");

    kitaev::Lattice lat = kitaev::build_two_leg_ladder(opt.n);
    kitaev::ThermalPoint tp{opt.beta, {opt.j, opt.k}, opt.n, kitaev::LatticeKind::TwoLegLadder};

    kitaev::Subsystem sub;
    if (opt.subsystem == "A") {
        sub = kitaev::subsystem_A(lat);
    } else if (opt.subsystem == "B") {
        sub = kitaev::subsystem_B(lat);
    } else if (opt.subsystem == "C") {
        std::vector<int> positions;
        for (int i = 0; i < opt.rungs; ++i) positions.push_back(i);
        sub = kitaev::subsystem_C(lat, positions);
    } else if (opt.subsystem == "D") {
        sub = kitaev::subsystem_D(lat);
    } else {
        throw std::invalid_argument("--sub must be one of A, B, C, D");
    }

    // Brute force needs the full diagonalization (dense budget: 3N <= 12).
    std::optional<kitaev::DensityMatrix> brute;
    if (lat.num_links <= 12)
        brute = kitaev::thermal_rdm(kitaev::build_hamiltonian(lat, tp.c), opt.beta, sub);

    kitaev::DensityMatrix closed;
    if (opt.subsystem == "A")
        closed = kitaev::rho_A_closed(opt.n);
    else if (opt.subsystem == "B")
        closed = kitaev::rho_B_closed(tp).dense();
    else if (opt.subsystem == "C")
        closed = kitaev::rho_C_closed(sub);
    else
        closed = kitaev::rho_D_closed();

    const kitaev::DensityMatrix& reported = brute ? *brute : closed;
    nlohmann::ordered_json report =
        nlohmann::ordered_json::parse(kitaev::rdm_report_json(sub, tp, reported));
    if (brute)
        report["trace_distance_closed_vs_brute"] = kitaev::trace_distance(closed, *brute);
    if (opt.units == "nats")
        report["entropy_nats"] = report["entropy_bits"].get<double>() * std::log(2.0);

    emit(opt.output, report.dump(2) + "\n");
    return kExitOk;
}

struct VerifyCliOptions {
    std::vector<std::string> skip;
    std::string output;
};

int run_verify(const VerifyCliOptions& opt) {
    kitaev::VerifyOptions options;
    options.num_threads = thread_count_from_env();
    for (const std::string& item : opt.skip) {
        if (item == "torus")
            options.skip_torus = true;
        else
            throw std::invalid_argument("unknown --skip target: " + item);
    }

    std::vector<kitaev::CheckResult> results = kitaev::run_acceptance_suite(options);
    for (const kitaev::CheckResult& r : results) std::cout << kitaev::format_check_line(r) << "\n";

    std::string report = kitaev::verify_report_json(results) + "\n";
    if (!opt.output.empty()) emit(opt.output, report);

    bool ok = kitaev::all_passed(results);
    std::cout << (ok ? "all checks passed" : "VERIFICATION FAILED") << "\n";
    return ok ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form spectrum, thermodynamics and reduced density "
                 "matrices of the toric-code ladder, with a built-in "
                 "exact-diagonalization verifier"};
    app.require_subcommand(1);

    CommonOptions spectrum_opt;
    CLI::App* spectrum = app.add_subcommand("spectrum", "complete spectrum histogram (CSV)");
    spectrum->add_option("--lattice", spectrum_opt.lattice, "two-leg | three-leg");
    spectrum->add_option("-N,--size", spectrum_opt.n, "ladder length")->required();
    spectrum->add_option("-J", spectrum_opt.j, "vertex coupling");
    spectrum->add_option("-K", spectrum_opt.k, "plaquette coupling");
    spectrum->add_option("-o,--output", spectrum_opt.output, "output path (default stdout)");

    ThermoOptions thermo_opt;
    CLI::App* thermo = app.add_subcommand("thermo", "thermal sweep (CSV)");
    thermo->add_option("--lattice", thermo_opt.lattice, "two-leg");
    thermo->add_option("-N,--size", thermo_opt.n, "ladder length")->required();
    thermo->add_option("-J", thermo_opt.j, "vertex coupling");
    thermo->add_option("-K", thermo_opt.k, "plaquette coupling");
    CLI::Option* beta_opt = thermo->add_option("--beta", thermo_opt.beta_min,
                                               "single inverse temperature");
    thermo->add_option("--beta-min", thermo_opt.beta_min, "grid start")->excludes(beta_opt);
    thermo->add_option("--beta-max", thermo_opt.beta_max, "grid end");
    thermo->add_option("--beta-steps", thermo_opt.beta_steps, "grid points");
    thermo->add_option("-o,--output", thermo_opt.output, "output path (default stdout)");

    RdmOptions rdm_opt;
    CLI::App* rdm = app.add_subcommand("rdm", "reduced density matrix report (JSON)");
    rdm->add_option("--sub", rdm_opt.subsystem, "A | B | C | D")->required();
    rdm->add_option("-N,--size", rdm_opt.n, "ladder length")->required();
    rdm->add_option("-J", rdm_opt.j, "vertex coupling");
    rdm->add_option("-K", rdm_opt.k, "plaquette coupling");
    rdm->add_option("--beta", rdm_opt.beta, "inverse temperature")->required();
    rdm->add_option("--rungs", rdm_opt.rungs, "rung count for subsystem C");
    rdm->add_option("--units", rdm_opt.units, "bits | nats");
    rdm->add_option("-o,--output", rdm_opt.output, "output path (default stdout)");

    VerifyCliOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    verify->add_option("--skip", verify_opt.skip, "checks to skip (torus)");
    verify->add_option("-o,--output", verify_opt.output, "JSON report path");

    try {
        app.parse(argc, argv);
        if (spectrum->parsed()) return run_spectrum(spectrum_opt);
        if (thermo->parsed()) {
            if (beta_opt->count() > 0 && thermo->count("--beta-steps") == 0) {
                thermo_opt.beta_max = thermo_opt.beta_min;
                thermo_opt.beta_steps = 1;
            }
            return run_thermo(thermo_opt);
        }
        if (rdm->parsed()) return run_rdm(rdm_opt);
        if (verify->parsed()) return run_verify(verify_opt);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
