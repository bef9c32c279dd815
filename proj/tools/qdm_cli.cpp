// qdm: distinguishability measures for classical distributions and quantum states.
//
// Exit codes:
//   0  success
//   1  verify found a violated inequality
//   2  malformed input, failed validation, or out-of-domain argument
//   3  dimension mismatch between the two inputs
//   4  requested size exceeds the dimension cap

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdm/families.hpp"
#include "qdm/io.hpp"
#include "qdm/parity.hpp"
#include "qdm/verify.hpp"

using nlohmann::ordered_json;
using namespace qdm;

namespace {

enum ExitCode { kOk = 0, kViolation = 1, kInvalid = 2, kMismatch = 3, kCapExceeded = 4 };

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out) {
        write_text_file(*cfg.out, text);
    } else {
        std::cout << text;
    }
}

ordered_json bounds_json(const SdBoundTerms& t) {
    ordered_json j;
    j["sd_lower_pe"] = t.lower_pe;
    j["sd_lower_b"] = t.lower_b;
    j["sd_upper_k"] = t.upper_k;
    j["sd_upper_b"] = t.upper_b;
    j["sd_upper_b_stated"] = t.upper_b_stated;
    return j;
}

int cmd_classical(const RunConfig& cfg, const std::string& p0_path, const std::string& p1_path) {
    const HypothesisPair h(read_distribution_file(p0_path, cfg.tol), read_distribution_file(p1_path, cfg.tol));
    ordered_json j;
    j["pe"] = pe(h);
    j["k"] = kolmogorov(h);
    j["b"] = bhattacharyya(h);
    j["sd"] = shannon_dist(h);
    j["bounds"] = bounds_json(sd_bound_terms_from_gap(pe(h), kolmogorov(h), bhattacharyya_gap(h)));
    emit(cfg, j.dump(2) + "\n");
    return kOk;
}

int cmd_quantum(const RunConfig& cfg, const std::string& r0_path, const std::string& r1_path, bool optimize,
                const std::string& povm_out) {
    const DensityMatrix r0 = read_density_file(r0_path, cfg.tol);
    const DensityMatrix r1 = read_density_file(r1_path, cfg.tol);
    if (r0.dim() > cfg.dim_cap) throw DimensionOverflow("input dimension exceeds --dim-cap");
    const QuantumPair q(r0, r1);
    const SdBounds bounds = sd_bounds(q, cfg.tol);
    ordered_json j;
    j["dim"] = q.dim();
    j["pe"] = q_pe(q, cfg.tol);
    j["k"] = q_kolmogorov(q, cfg.tol);
    j["b"] = q_bhattacharyya(q, cfg.tol);
    j["sd_lower"] = bounds.lower;
    j["sd_upper"] = bounds.upper;
    j["bounds"] = bounds_json(bounds.terms);
    if (optimize) {
        SdConfig sd = cfg.sd;
        sd.seed = cfg.seed;
        const SdEstimate est = sd_optimize(q, sd, cfg.tol);
        j["sd_optimized"] = est.value;
        j["sd_optimizer_converged"] = est.converged;
        j["povm_outcomes"] = est.povm.outcomes();
        if (!povm_out.empty()) write_text_file(povm_out, format_povm(est.povm));
    }
    emit(cfg, j.dump(2) + "\n");
    return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::optional<std::size_t> trials,
               std::size_t m_min, std::size_t m_max, std::size_t d_min, std::size_t d_max,
               std::size_t grid_points) {
    std::vector<IneqReport> reports;
    const bool all = suite == "all";
    if (all || suite == "classical") {
        auto r = verify_classical(trials.value_or(10000), m_min, m_max, cfg.seed, std::min(cfg.assert_tol, kClassicalTol));
        reports.insert(reports.end(), r.begin(), r.end());
    }
    if (all || suite == "quantum") {
        SdConfig sd{0, 2, 150};
        auto r = verify_quantum(trials.value_or(1000), d_min, d_max, cfg.seed, cfg.assert_tol, sd);
        reports.insert(reports.end(), r.begin(), r.end());
    }
    if (all || suite == "envelope") reports.push_back(verify_entropy_envelope(grid_points));
    std::string text;
    bool ok = true;
    for (const auto& r : reports) {
        text += r.to_json_line() + "\n";
        ok = ok && r.passed();
    }
    emit(cfg, text);
    return ok ? kOk : kViolation;
}

ordered_json certification_json(const Certification& c) {
    ordered_json j;
    j["measure"] = measure_name(c.fit.measure);
    switch (c.status) {
        case CertifyStatus::kCertified: j["status"] = "certified"; break;
        case CertifyStatus::kRefuted: j["status"] = "refuted"; break;
        case CertifyStatus::kDegenerate: j["status"] = "degenerate"; break;
    }
    j["epsilon"] = c.fit.epsilon;
    j["bound_epsilon"] = c.fit.bound_epsilon;
    j["n0"] = c.fit.n0;
    if (c.witness_n) j["witness_n"] = *c.witness_n;
    return j;
}

int cmd_family(const RunConfig& cfg, const std::string& name, const std::string& file, std::optional<int> n_max,
               double alpha) {
    CertifyOptions opt;
    opt.tol = cfg.assert_tol;
    const PairFamily fam = file.empty() ? named_family(name, n_max.value_or(name == "parity" ? 10 : 12), alpha)
                                        : read_family_file(file, n_max, cfg.tol);
    if (std::holds_alternative<PairFamily::QuantumGenerator>(fam.generator) &&
        (fam.n_max >= 63 || (std::size_t{1} << fam.n_max) > cfg.dim_cap) && fam.name.rfind("parity", 0) == 0) {
        throw DimensionOverflow("parity horizon 2^" + std::to_string(fam.n_max) + " exceeds --dim-cap");
    }
    const AuditResult audit = equivalence_audit(fam, opt, cfg.tol);
    ordered_json j;
    j["family"] = fam.name;
    j["n_max"] = fam.n_max;
    ordered_json rows = ordered_json::array();
    for (const auto& r : audit.rows) {
        rows.push_back({{"n", r.n}, {"k", r.k}, {"pe", r.pe}, {"b", r.b}, {"sd", r.sd},
                        {"sd_is_upper_bound", r.sd_is_upper_bound}});
    }
    j["rows"] = std::move(rows);
    ordered_json fits = ordered_json::array();
    for (const auto& f : audit.fits) fits.push_back(certification_json(f));
    j["fits"] = std::move(fits);
    j["envelopes_hold"] = audit.envelopes_hold;
    j["rates_consistent"] = audit.rates_consistent;
    j["all_certified"] = audit.all_certified;
    emit(cfg, j.dump(2) + "\n");
    return kOk;
}

int cmd_parity(const RunConfig& cfg, double alpha, int n, const std::string& figure, std::size_t points,
               bool brute) {
    if (!figure.empty()) {
        std::ostringstream csv;
        write_figure_csv(csv, emit_figure_data(figure_alpha_grid(points)));
        write_text_file(figure, csv.str());
    }
    const ParityConfig pc(alpha, n);
    if (n >= 63 || (std::size_t{1} << n) > cfg.dim_cap) {
        throw DimensionOverflow("parity states of dimension 2^" + std::to_string(n) + " exceed --dim-cap");
    }
    ordered_json j;
    j["alpha"] = alpha;
    j["n"] = n;
    j["k"] = parity_k(pc);
    j["b"] = parity_b(pc);
    if (n == 2) j["sd"] = parity_sd2(alpha);
    if (brute) {
        const QuantumPair q = build_parity_states(pc, cfg.dim_cap);
        j["k_full"] = q_kolmogorov(q, cfg.tol);
        j["b_full"] = q_bhattacharyya(q, cfg.tol);
    }
    if (!figure.empty()) j["figure"] = figure;
    emit(cfg, j.dump(2) + "\n");
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distinguishability measures for classical distributions and quantum states"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string out;
    app.add_option("--seed", cfg.seed, "Seed for randomized commands")->capture_default_str();
    app.add_option("--tol", cfg.assert_tol, "Assertion tolerance")->capture_default_str();
    app.add_option("--dim-cap", cfg.dim_cap, "Largest matrix dimension accepted")->capture_default_str();
    app.add_option("--out", out, "Write the report here instead of stdout");
    app.add_option("--herm-tol", cfg.tol.herm, "Hermiticity tolerance")->capture_default_str();
    app.add_option("--psd-tol", cfg.tol.psd, "Positivity tolerance")->capture_default_str();
    app.add_option("--eig-tol", cfg.tol.eig, "Eigensolver and completeness tolerance")->capture_default_str();

    auto* classical = app.add_subcommand("classical", "Measures of two distribution files");
    std::string p0, p1;
    classical->add_option("p0", p0)->required()->check(CLI::ExistingFile);
    classical->add_option("p1", p1)->required()->check(CLI::ExistingFile);

    auto* quantum = app.add_subcommand("quantum", "Measures of two density-matrix files");
    std::string r0, r1, povm_out;
    bool optimize = false;
    quantum->add_option("rho0", r0)->required()->check(CLI::ExistingFile);
    quantum->add_option("rho1", r1)->required()->check(CLI::ExistingFile);
    quantum->add_flag("--optimize", optimize, "Search for the measurement maximizing mutual information");
    quantum->add_option("--povm-out", povm_out, "Write the optimizing POVM here");
    quantum->add_option("--restarts", cfg.sd.restarts)->capture_default_str();
    quantum->add_option("--iterations", cfg.sd.iterations)->capture_default_str();
    quantum->add_option("--outcomes", cfg.sd.outcomes, "POVM size (0: dim + 1)")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Randomized inequality checks");
    std::string suite = "all";
    std::optional<std::size_t> trials;
    std::size_t m_min = 2, m_max = 16, d_min = 2, d_max = 4, grid = 10000;
    verify->add_option("--suite", suite)->check(CLI::IsMember({"classical", "quantum", "envelope", "all"}))
        ->capture_default_str();
    verify->add_option("--trials", trials, "Trials per suite (default 10000 classical, 1000 quantum)");
    verify->add_option("--m-min", m_min)->capture_default_str();
    verify->add_option("--m-max", m_max)->capture_default_str();
    verify->add_option("--d-min", d_min)->capture_default_str();
    verify->add_option("--d-max", d_max)->capture_default_str();
    verify->add_option("--grid", grid, "Envelope grid points")->capture_default_str();

    auto* family = app.add_subcommand("family", "Rate certification and four-measure audit of a family");
    std::string fam_name = "uniform-vs-modified", fam_file;
    std::optional<int> n_max;
    double fam_alpha = std::numbers::pi / 8;
    family->add_option("name", fam_name, "uniform-vs-modified or parity")->capture_default_str();
    family->add_option("--file", fam_file, "Family document")->check(CLI::ExistingFile);
    family->add_option("--n-max", n_max);
    family->add_option("--alpha", fam_alpha)->capture_default_str();

    auto* parity = app.add_subcommand("parity", "Parity-bit values and figure dataset");
    double alpha = std::numbers::pi / 8;
    int n = 2;
    std::string figure;
    std::size_t points = 200;
    bool brute = false;
    parity->add_option("--alpha", alpha)->capture_default_str();
    parity->add_option("--n", n)->capture_default_str();
    parity->add_option("--figure", figure, "Write the n = 2 bound dataset (CSV) here");
    parity->add_option("--points", points, "Figure grid size")->capture_default_str();
    parity->add_flag("--brute", brute, "Also evaluate from the full 2^n-dimensional states");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }
    if (!out.empty()) cfg.out = out;

    try {
        cfg.validate();
        if (*classical) return cmd_classical(cfg, p0, p1);
        if (*quantum) return cmd_quantum(cfg, r0, r1, optimize, povm_out);
        if (*verify) return cmd_verify(cfg, suite, trials, m_min, m_max, d_min, d_max, grid);
        if (*family) return cmd_family(cfg, fam_name, fam_file, n_max, fam_alpha);
        if (*parity) return cmd_parity(cfg, alpha, n, figure, points, brute);
    } catch (const InvalidValue& e) {
        std::cerr << "error: invalid input (" << e.invariant() << "): " << e.what() << "\n";
        return kInvalid;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: dimension mismatch: " << e.what() << "\n";
        return kMismatch;
    } catch (const DimensionOverflow& e) {
        std::cerr << "error: dimension cap: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
