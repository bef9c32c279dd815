// Acceptance gate: runs every acceptance criterion and prints one PASS/FAIL
// line per criterion. Exit status is non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qdm/families.hpp"
#include "qdm/linalg.hpp"
#include "qdm/parity.hpp"
#include "qdm/verify.hpp"

using namespace qdm;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

Outcome trine() {
    const DensityMatrix v = DensityMatrix::from_pure(vertical());
    const ProbDist p = apply(make_trine(), v);
    const double err = std::max({std::abs(p[0]), std::abs(p[1] - 0.5), std::abs(p[2] - 0.5)});
    return {err <= 1e-12, fmt("max |p - (0, 1/2, 1/2)| = %.2e (tol 1e-12)", err)};
}

Outcome helstrom() {
    Rng rng(20240611);
    double worst_closed = 0.0;
    double worst_slack = 1.0;
    for (int t = 0; t < 1000; ++t) {
        const auto d = static_cast<std::size_t>(rng.uniform_int(2, 6));
        const DensityMatrix r0 = random_density(d, static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(d))), rng);
        const DensityMatrix r1 = random_density(d, static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(d))), rng);
        const double achieved = pe(apply(helstrom_pvm(r0, r1), r0, r1));
        const double closed = 0.5 - 0.25 * oracle::trace_norm(oracle::to_eigen(r0.matrix() - r1.matrix()));
        worst_closed = std::max(worst_closed, std::abs(achieved - closed));
        for (int k = 0; k < 1000; ++k) {
            const Povm e = random_povm(d, static_cast<std::size_t>(rng.uniform_int(2, 2 * static_cast<int>(d))),
                                       rng.next_seed());
            worst_slack = std::min(worst_slack, pe(apply(e, r0, r1)) - achieved);
        }
    }
    return {worst_closed <= 1e-10 && worst_slack >= -1e-9,
            fmt("|PE_helstrom - (1/2 - Tr|G|/4)| max %.2e (tol 1e-10); random-POVM slack min %.2e (tol -1e-9)",
                worst_closed, worst_slack)};
}

std::vector<double> parity_alphas() {
    std::vector<double> g;
    for (int i = 0; i < 25; ++i) g.push_back(std::numbers::pi / 2 * i / 24);
    return g;
}

Outcome parity_k_oracle() {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        for (double a : parity_alphas()) {
            const QuantumPair q = build_parity_states(ParityConfig(a, n));
            worst = std::max(worst, std::abs(parity_k(ParityConfig(a, n)) - 0.5 * trace_norm(q.difference())));
        }
    }
    return {worst <= 1e-9, fmt("max |K formula - brute force| = %.2e over n=1..6 x 25 angles (tol 1e-9)", worst)};
}

Outcome parity_b_oracle() {
    double worst = 0.0;
    double worst_n2 = 0.0;
    for (int n = 1; n <= 6; ++n) {
        for (double a : parity_alphas()) {
            const QuantumPair q = build_parity_states(ParityConfig(a, n));
            const double block_sum = parity_b(ParityConfig(a, n));
            worst = std::max(worst, std::abs(block_sum - q_bhattacharyya(q)));
            if (n == 2) worst_n2 = std::max(worst_n2, std::abs(block_sum - std::abs(std::cos(2 * a))));
        }
    }
    return {worst <= 1e-8 && worst_n2 <= 1e-12,
            fmt("max |block sum - full-state fidelity| = %.2e (tol 1e-8); n=2 vs |cos 2a| %.2e (tol 1e-12)", worst,
                worst_n2)};
}

Outcome parity_sd() {
    double worst_full = 0.0;
    double worst_block = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double a = std::numbers::pi / 2 * i / 19;
        const double closed = parity_sd2(a);
        const SdEstimate e = sd_optimize(build_parity_states(ParityConfig(a, 2)));
        worst_full = std::max(worst_full, std::abs(e.value - closed));
        worst_block = std::max(worst_block, std::abs(parity_sd2_block_search(a) - closed));
    }
    return {worst_full <= 1e-4 && worst_block <= 1e-6,
            fmt("4x4 optimizer max err %.2e (tol 1e-4); block-reduced max err %.2e (tol 1e-6), 20 angles",
                worst_full, worst_block)};
}

Outcome inequality_fuzz() {
    std::size_t violations = 0;
    double worst_c = 1.0, worst_q = 1.0;
    std::string failed;
    for (const auto& r : verify_classical(10000, 2, 16, 1, 1e-10)) {
        if (!r.asserted || r.name == "PEIsK") continue;
        violations += r.violations;
        worst_c = std::min(worst_c, r.worst_slack);
        if (r.violations) failed += " " + r.name;
    }
    for (const auto& r : verify_quantum(1000, 2, 4, 1, 1e-9)) {
        if (!r.asserted) continue;
        violations += r.violations;
        worst_q = std::min(worst_q, r.worst_slack);
        if (r.violations) failed += " " + r.name;
    }
    return {violations == 0, fmt("violations %.0f; worst classical slack %.2e (tol 1e-10), worst quantum slack %.2e (tol 1e-9)",
                                 static_cast<double>(violations), worst_c, worst_q) + failed};
}

Outcome envelope() {
    const IneqReport r = verify_entropy_envelope(10000, 1e-12);
    return {r.violations == 0 && r.worst_slack >= -1e-12,
            fmt("worst slack %.2e over %.0f grid points (tol -1e-12)", r.worst_slack, static_cast<double>(r.trials))};
}

Outcome fidelity_structure() {
    Rng rng(8);
    double worst_mult = 0.0, worst_sq = 1.0, worst_doubly = 1.0;
    for (int t = 0; t < 1000; ++t) {
        auto draw = [&] { return random_density(2, static_cast<std::size_t>(rng.uniform_int(1, 2)), rng); };
        const DensityMatrix r0 = draw(), r1 = draw(), r2 = draw(), r3 = draw();
        const double mu = rng.uniform();
        worst_mult = std::max(worst_mult, check_b_multiplicative(r0, r1, r2, r3));
        const ConcavitySlack s = check_b_concavity(r0, r1, r2, mu);
        worst_sq = std::min(worst_sq, s.squared);
        worst_doubly = std::min({worst_doubly, s.doubly, check_b_joint_concavity(r0, r1, r2, r3, mu)});
    }
    return {worst_mult <= 1e-8 && worst_sq >= -1e-9 && worst_doubly >= -1e-9,
            fmt("multiplicativity residual max %.2e (tol 1e-8); squared-concavity slack min %.2e, "
                "joint-concavity slack min %.2e (tol -1e-9)",
                worst_mult, worst_sq, worst_doubly)};
}

Outcome exp_indist() {
    const Certification u = certify_exp_indist(uniform_vs_modified_family(20));
    const Certification p = certify_exp_indist(parity_family(std::numbers::pi / 8, 10));
    const AuditResult au = equivalence_audit(uniform_vs_modified_family(20));
    const AuditResult ap = equivalence_audit(parity_family(std::numbers::pi / 8, 10));
    const double eu = std::abs(u.fit.epsilon - 0.5);
    const double ep = std::abs(p.fit.epsilon - std::sqrt(0.5));
    const bool audits = au.envelopes_hold && au.all_certified && au.rates_consistent && ap.envelopes_hold &&
                        ap.all_certified && ap.rates_consistent;
    const bool ok = u.status == CertifyStatus::kCertified && eu <= 1e-12 && p.status == CertifyStatus::kCertified &&
                    ep <= 1e-9 && audits;
    return {ok, fmt("uniform-vs-modified |eps - 1/2| = %.2e; parity(pi/8) |eps - sqrt2/2| = %.2e (tol 1e-9); "
                    "four-measure audits ",
                    eu, ep) +
                    (audits ? "hold" : "FAIL")};
}

Outcome figure() {
    std::ostringstream csv;
    write_figure_csv(csv, emit_figure_data(figure_alpha_grid(200)));
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    bool header_ok = line == kFigureHeader;
    std::vector<std::array<double, 6>> rows;
    while (std::getline(in, line)) {
        std::array<double, 6> r{};
        std::istringstream ls(line);
        std::string cell;
        for (auto& x : r) {
            std::getline(ls, cell, ',');
            x = std::stod(cell);
        }
        rows.push_back(r);
    }
    double worst = 1.0;
    for (const auto& r : rows) {
        // alpha, lower_pe, sd, upper_k, lower_b, upper_b
        worst = std::min({worst, r[2] - r[1], r[3] - r[2], r[2] - r[4], r[5] - r[2]});
    }
    double end_err = 0.0;
    for (int c = 1; c < 6; ++c) {
        end_err = std::max(end_err, std::abs(rows.front()[static_cast<std::size_t>(c)]));
        end_err = std::max(end_err, std::abs(rows.back()[static_cast<std::size_t>(c)] - 1.0));
    }
    const bool ok = header_ok && rows.size() == 200 && worst >= -1e-12 && end_err <= 1e-9 &&
                    std::abs(rows.back()[0] - std::numbers::pi / 4) <= 1e-12;
    return {ok, fmt("%.0f rows; min sandwich slack %.2e (tol -1e-12); endpoint error %.2e (tol 1e-9)",
                    static_cast<double>(rows.size()), worst, end_err)};
}

Outcome purification() {
    Rng rng(11);
    double worst_pt = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const auto d = static_cast<std::size_t>(rng.uniform_int(2, 6));
        const DensityMatrix rho = random_density(d, static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(d))), rng);
        worst_pt = std::max(worst_pt, max_abs_diff(partial_trace_second(purify(rho).projector(), d, d), rho.matrix()));
    }
    double worst_overlap = 0.0;
    for (int t = 0; t < 100; ++t) {
        DensityMatrix r0 = random_density(2, static_cast<std::size_t>(rng.uniform_int(1, 2)), rng);
        const QuantumPair q(r0, random_density(2, static_cast<std::size_t>(rng.uniform_int(1, 2)), rng));
        OverlapConfig cfg;
        cfg.seed = rng.next_seed();
        worst_overlap = std::max(worst_overlap, std::abs(overlap_search(q, cfg).value - q_bhattacharyya(q)));
    }
    return {worst_pt <= 1e-12 && worst_overlap <= 1e-3,
            fmt("partial-trace error max %.2e (tol 1e-12); |overlap - B| max %.2e (tol 1e-3)", worst_pt,
                worst_overlap)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "trine distribution", 1e-3, trine},
        {2, "Helstrom closed form and minimality", 60, helstrom},
        {3, "parity K oracle", 30, parity_k_oracle},
        {4, "parity B oracle", 60, parity_b_oracle},
        {5, "parity SD at n=2", 300, parity_sd},
        {6, "inequality fuzz", 300, inequality_fuzz},
        {7, "entropy envelope", 1, envelope},
        {8, "fidelity structure", 60, fidelity_structure},
        {9, "exponential indistinguishability", 120, exp_indist},
        {10, "figure reproduction", 60, figure},
        {11, "purification and overlap", 120, purification},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_seconds;
        const bool pass = o.pass && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s  [%2d] %s: %s; %.3f s (budget %g s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, c.budget_seconds, in_time ? "" : ", EXCEEDED");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
