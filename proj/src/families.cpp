#include "qdm/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "qdm/error.hpp"
#include "qdm/linalg.hpp"
#include "qdm/parity.hpp"

namespace qdm {

const char* measure_name(Measure m) {
    switch (m) {
        case Measure::kK: return "K";
        case Measure::kPE: return "PE";
        case Measure::kB: return "B";
        case Measure::kSD: return "SD";
    }
    return "?";
}

double MeasureRow::gap(Measure m) const {
    switch (m) {
        case Measure::kK: return k;
        case Measure::kPE: return 0.5 - pe;
        case Measure::kB: return 1.0 - b;
        case Measure::kSD: return sd;
    }
    return 0.0;
}

std::vector<MeasureRow> evaluate_family(const PairFamily& fam, const Tolerances& tol) {
    if (fam.n_max < 1) throw DomainError("family horizon must be >= 1");
    std::vector<MeasureRow> rows;
    rows.reserve(static_cast<std::size_t>(fam.n_max));
    for (int n = 1; n <= fam.n_max; ++n) {
        if (fam.closed_form) {
            if (auto row = fam.closed_form(n)) {
                rows.push_back(*row);
                continue;
            }
        }
        if (const auto* gen = std::get_if<PairFamily::ClassicalGenerator>(&fam.generator)) {
            const HypothesisPair h = (*gen)(n);
            rows.push_back({n, kolmogorov(h), pe(h), bhattacharyya(h), shannon_dist(h), false});
        } else {
            const QuantumPair q = std::get<PairFamily::QuantumGenerator>(fam.generator)(n);
            const double k = q_kolmogorov(q, tol);
            rows.push_back({n, k, q_pe(q, tol), q_bhattacharyya(q, tol), k, true});
        }
    }
    return rows;
}

PairFamily uniform_vs_modified_family(int n_max) {
    if (n_max < 1 || n_max > 24) throw DomainError("uniform-vs-modified horizon must lie in [1, 24]");
    auto gen = [](int n) {
        const std::size_t size = std::size_t{1} << n;
        const double u = 1.0 / static_cast<double>(size);
        std::vector<double> p0(size, u);
        std::vector<double> p1(size, u);
        p1.front() = 0.0;
        p1.back() = 2.0 * u;
        return HypothesisPair(ProbDist(std::move(p0)), ProbDist(std::move(p1)));
    };
    return {"uniform-vs-modified", PairFamily::ClassicalGenerator(gen), n_max, {}};
}

PairFamily constant_family(HypothesisPair pair, int n_max) {
    auto gen = [pair](int) { return pair; };
    return {"constant", PairFamily::ClassicalGenerator(gen), n_max, {}};
}

PairFamily parity_family(double alpha, int n_max, int brute_force_max_n) {
    ParityConfig(alpha, 1);  // validates alpha
    if (n_max < 1) throw DomainError("parity horizon must be >= 1");
    auto gen = [alpha](int n) { return build_parity_states(ParityConfig(alpha, n)); };
    // Larger members use the 2x2 block decomposition: trace norm and fidelity
    // summed over blocks.
    auto blocks = [alpha, brute_force_max_n](int n) -> std::optional<MeasureRow> {
        if (n <= brute_force_max_n) return std::nullopt;
        const ParityBlocks pb = block_decompose(ParityConfig(alpha, n));
        double k = 0.0;
        for (const auto& b : pb.blocks) k += 0.5 * b.multiplicity * trace_norm(b.sigma0 - b.sigma1);
        return MeasureRow{n, k, 0.5 - 0.5 * k, pb.bhattacharyya_sum(), k, true};
    };
    char name[64];
    std::snprintf(name, sizeof name, "parity(alpha=%.6g)", alpha);
    return {name, PairFamily::QuantumGenerator(gen), n_max, blocks};
}

Certification certify_decay(std::span<const double> gaps, Measure measure, const CertifyOptions& opt) {
    const int n_max = static_cast<int>(gaps.size());
    if (n_max < 3) throw DomainError("rate certification needs at least three members");
    const auto gap = [&](int n) { return gaps[static_cast<std::size_t>(n - 1)]; };
    const auto positive = [&](int n) { return gap(n) > opt.zero_floor; };

    Certification out{CertifyStatus::kDegenerate, {0.0, 0.0, 1, measure, {}}, std::nullopt};
    if (std::none_of(gaps.begin(), gaps.end(), [&](double g) { return g > opt.zero_floor; })) return out;

    // Largest suffix of positive gaps.
    int start = n_max;
    while (start > 1 && positive(start - 1)) --start;
    if (!positive(n_max)) {
        // Trailing zeros: the family reaches its limit exactly. Fit the last
        // positive run instead; the zeros satisfy any bound.
        int end = n_max;
        while (!positive(end)) --end;
        start = end;
        while (start > 1 && positive(start - 1)) --start;
    }
    int end = start;
    while (end < n_max && positive(end + 1)) ++end;

    double slope = 0.0;
    double intercept = std::log2(gap(end));
    const int count = end - start + 1;
    if (count >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int n = start; n <= end; ++n) {
            const double y = std::log2(gap(n));
            sx += n;
            sy += y;
            sxx += static_cast<double>(n) * n;
            sxy += n * y;
        }
        slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
        intercept = (sy - slope * sx) / count;
    } else {
        slope = std::log2(gap(end)) / end;
        intercept = 0.0;
    }
    out.fit.epsilon = std::exp2(slope);
    for (int n = start; n <= end; ++n) {
        out.fit.residuals.push_back(std::log2(gap(n)) - (intercept + slope * n));
    }

    const auto holds_from = [&](double eps) -> std::optional<int> {
        std::optional<int> n0;
        for (int n = n_max; n >= 1; --n) {
            if (gap(n) > std::pow(eps, n)) break;
            n0 = n;
        }
        return n0;
    };
    const auto worst_rate_n = [&]() {
        int best = 1;
        double best_rate = -1.0;
        for (int n = 1; n <= n_max; ++n) {
            const double r = std::pow(std::max(gap(n), 0.0), 1.0 / n);
            if (r > best_rate) {
                best_rate = r;
                best = n;
            }
        }
        return best;
    };

    double bound = out.fit.epsilon + opt.tol;
    std::optional<int> n0 = bound < 1.0 ? holds_from(bound) : std::nullopt;
    if (!n0 && out.fit.epsilon < 1.0) {
        // The fitted line undershoots the tail; fall back to the largest
        // per-step rate over the second half of the horizon.
        double eps = 0.0;
        for (int n = n_max / 2 + 1; n <= n_max; ++n) eps = std::max(eps, std::pow(std::max(gap(n), 0.0), 1.0 / n));
        bound = eps + opt.tol;
        if (bound < 1.0) n0 = holds_from(bound);
    }
    out.fit.bound_epsilon = bound;
    if (n0) {
        out.status = CertifyStatus::kCertified;
        out.fit.n0 = *n0;
    } else {
        out.status = CertifyStatus::kRefuted;
        out.fit.n0 = n_max;
        out.witness_n = worst_rate_n();
    }
    return out;
}

Certification certify_exp_indist(const PairFamily& fam, const CertifyOptions& opt, const Tolerances& tol) {
    const auto rows = evaluate_family(fam, tol);
    std::vector<double> gaps;
    for (const auto& r : rows) gaps.push_back(r.gap(Measure::kK));
    return certify_decay(gaps, Measure::kK, opt);
}

AuditResult equivalence_audit(const PairFamily& fam, const CertifyOptions& opt, const Tolerances& tol) {
    AuditResult out{evaluate_family(fam, tol), {}, true, true, true};
    for (Measure m : {Measure::kK, Measure::kPE, Measure::kB, Measure::kSD}) {
        std::vector<double> gaps;
        for (const auto& r : out.rows) gaps.push_back(r.gap(m));
        out.fits[static_cast<std::size_t>(m)] = certify_decay(gaps, m, opt);
    }
    const Certification& k_fit = out.fits[0];
    for (const auto& f : out.fits) {
        if (f.status == CertifyStatus::kRefuted) out.all_certified = false;
    }
    if (k_fit.status == CertifyStatus::kRefuted) {
        out.envelopes_hold = false;
        out.rates_consistent = false;
        return out;
    }
    if (k_fit.status == CertifyStatus::kCertified) {
        const double eps = k_fit.fit.bound_epsilon;
        constexpr double slack = 1e-12;
        for (const auto& r : out.rows) {
            if (r.n < k_fit.fit.n0) continue;
            const double e = std::pow(eps, r.n);
            if (r.gap(Measure::kPE) > 0.5 * e + slack || r.gap(Measure::kB) > e + slack ||
                r.gap(Measure::kSD) > e + slack) {
                out.envelopes_hold = false;
            }
        }
        for (std::size_t m = 1; m < out.fits.size(); ++m) {
            const auto& f = out.fits[m];
            if (f.status == CertifyStatus::kCertified && f.fit.epsilon > k_fit.fit.epsilon + 1e-6) {
                out.rates_consistent = false;
            }
        }
    } else {
        // K vanishes identically: every other measure must sit at its limit.
        for (const auto& f : out.fits) {
            if (f.status != CertifyStatus::kDegenerate) out.envelopes_hold = false;
        }
    }
    return out;
}

}  // namespace qdm
