#include "qdm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "qdm/error.hpp"
#include "qdm/random.hpp"

namespace qdm {

void IneqReport::record(double slack) {
    worst_slack = trials == 0 ? slack : std::min(worst_slack, slack);
    ++trials;
    if (!(slack >= -tol)) ++violations;
}

std::string IneqReport::to_json_line() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["trials"] = trials;
    j["worst_slack"] = worst_slack;
    j["violations"] = violations;
    j["seed"] = seed;
    j["tol"] = tol;
    j["asserted"] = asserted;
    return j.dump();
}

namespace {

class ReportSet {
public:
    ReportSet(std::uint64_t seed, double tol) : seed_(seed), tol_(tol) {}

    IneqReport& operator[](const std::string& name) {
        for (auto& r : reports_) {
            if (r.name == name) return r;
        }
        reports_.push_back({name, 0, 0.0, 0, seed_, tol_, true});
        return reports_.back();
    }

    std::vector<IneqReport> take() { return std::move(reports_); }

private:
    std::uint64_t seed_;
    double tol_;
    std::vector<IneqReport> reports_;
};

// Registers every report up front so the output order is fixed.
void declare(ReportSet& set, const std::string& prefix) {
    for (const char* base : {"BLeqK-left", "BLeqK-right", "PELeqSD-left", "PELeqSD-right", "BLeqSD-left",
                             "BLeqSD-right", "BLeqSD-right-stated"}) {
        set[prefix + base];
    }
    set[prefix + "BLeqSD-right-stated"].asserted = false;
}

// b_gap = 1 - B
void record_catalog(ReportSet& set, const std::string& prefix, double pe_v, double k, double b_gap, double sd) {
    const SdBoundTerms t = sd_bound_terms_from_gap(pe_v, k, b_gap);
    set[prefix + "BLeqK-left"].record(k - b_gap);
    set[prefix + "BLeqK-right"].record(std::sqrt(std::max(0.0, b_gap * (2.0 - b_gap))) - k);
    set[prefix + "PELeqSD-left"].record(sd - t.lower_pe);
    set[prefix + "PELeqSD-right"].record(t.upper_k - sd);
    set[prefix + "BLeqSD-left"].record(sd - t.lower_b);
    set[prefix + "BLeqSD-right"].record(t.upper_b - sd);
    set[prefix + "BLeqSD-right-stated"].record(t.upper_b_stated - sd);
}

std::vector<double> normalized(std::vector<double> v) {
    const double s = std::accumulate(v.begin(), v.end(), 0.0);
    for (auto& x : v) x /= s;
    return v;
}

// Dirichlet sample supported on the outcomes where mask is set.
std::vector<double> dirichlet_on(const std::vector<bool>& mask, Rng& rng) {
    std::vector<double> p(mask.size(), 0.0);
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) p[i] = -std::log1p(-rng.uniform());
    }
    return normalized(std::move(p));
}

HypothesisPair classical_trial(std::size_t trial, std::size_t m, Rng& rng) {
    std::vector<double> p0 = dirichlet(m, rng);
    std::vector<double> p1;
    switch (trial == 0 ? 0 : 1 + trial % 4) {
        case 0:
            p1 = p0;
            break;
        case 1: {
            // Shared support on a random subset of at least one outcome.
            std::vector<bool> mask(m);
            for (std::size_t i = 0; i < m; ++i) mask[i] = rng.uniform() < 0.6;
            mask[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(m) - 1))] = true;
            p0 = dirichlet_on(mask, rng);
            p1 = dirichlet_on(mask, rng);
            break;
        }
        case 2: {
            // Disjoint supports: a random split of the outcomes.
            std::vector<bool> mask(m);
            for (std::size_t i = 0; i < m; ++i) mask[i] = (i % 2 == 0);
            for (std::size_t i = m; i > 1; --i) {
                std::swap(mask[i - 1], mask[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(i) - 1))]);
            }
            std::vector<bool> other(m);
            for (std::size_t i = 0; i < m; ++i) other[i] = !mask[i];
            p0 = dirichlet_on(mask, rng);
            p1 = dirichlet_on(other, rng);
            break;
        }
        case 3: {
            const double delta = std::pow(10.0, -1.0 - 7.0 * rng.uniform());
            const std::vector<double> q = dirichlet(m, rng);
            p1.resize(m);
            for (std::size_t i = 0; i < m; ++i) p1[i] = (1.0 - delta) * p0[i] + delta * q[i];
            p1 = normalized(std::move(p1));
            break;
        }
        default:
            p1 = dirichlet(m, rng);
            break;
    }
    return HypothesisPair(ProbDist(std::move(p0)), ProbDist(std::move(p1)));
}

DensityMatrix pure_density(std::size_t d, Rng& rng) { return random_density(d, 1, rng); }

QuantumPair quantum_trial(std::size_t trial, std::size_t d, Rng& rng) {
    switch (trial == 0 ? 0 : 1 + trial % 4) {
        case 0: {
            const DensityMatrix r = random_density(d, d, rng);
            return QuantumPair(r, r);
        }
        case 1: {
            // Orthogonal pure states: two columns of a Haar unitary.
            const ComplexMatrix u = haar_unitary(d, rng);
            std::vector<Complex> a(d), b(d);
            for (std::size_t i = 0; i < d; ++i) {
                a[i] = u(i, 0);
                b[i] = u(i, 1);
            }
            return QuantumPair(DensityMatrix::from_pure(PureState(a)), DensityMatrix::from_pure(PureState(b)));
        }
        case 2: {
            DensityMatrix r0 = pure_density(d, rng);
            return QuantumPair(r0, pure_density(d, rng));
        }
        case 3: {
            const std::size_t rank = d == 2 ? 1 : static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(d) - 1));
            DensityMatrix r0 = random_density(d, rank, rng);
            return QuantumPair(r0, random_density(d, d, rng));
        }
        default: {
            DensityMatrix r0 = random_density(d, d, rng);
            return QuantumPair(r0, random_density(d, d, rng));
        }
    }
}

void check_trials(std::size_t trials) {
    if (trials < 1) throw DomainError("verification needs at least one trial");
}

}  // namespace

std::vector<IneqReport> verify_classical(std::size_t trials, std::size_t m_min, std::size_t m_max,
                                         std::uint64_t seed, double tol) {
    check_trials(trials);
    if (m_min < 2 || m_max < m_min) throw DomainError("outcome range must satisfy 2 <= m_min <= m_max");
    ReportSet set(seed, tol);
    set["PEIsK"].tol = kEnvelopeTol;
    declare(set, "");
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto m = static_cast<std::size_t>(rng.uniform_int(static_cast<int>(m_min), static_cast<int>(m_max)));
        const HypothesisPair h = classical_trial(t, m, rng);
        const double pe_v = pe(h);
        const double k = kolmogorov(h);
        set["PEIsK"].record(-std::abs(pe_v - (0.5 - 0.5 * k)));
        record_catalog(set, "", pe_v, k, bhattacharyya_gap(h), shannon_dist(h));
    }
    return set.take();
}

std::vector<IneqReport> verify_quantum(std::size_t trials, std::size_t d_min, std::size_t d_max,
                                       std::uint64_t seed, double tol, const SdConfig& sd_cfg) {
    check_trials(trials);
    if (d_min < 2 || d_max < d_min) throw DomainError("dimension range must satisfy 2 <= d_min <= d_max");
    ReportSet set(seed, tol);
    declare(set, "Q");
    set["QSD-window"];
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto d = static_cast<std::size_t>(rng.uniform_int(static_cast<int>(d_min), static_cast<int>(d_max)));
        const QuantumPair q = quantum_trial(t, d, rng);
        SdConfig cfg = sd_cfg;
        cfg.seed = rng.next_seed();
        const SdEstimate est = sd_optimize(q, cfg);
        const double k = q_kolmogorov(q);
        record_catalog(set, "Q", q_pe(q), k, 1.0 - q_bhattacharyya(q), est.value);
        const SdBounds bounds = sd_bounds(q);
        set["QSD-window"].record(bounds.upper - bounds.lower);
    }
    return set.take();
}

IneqReport verify_entropy_envelope(std::size_t grid_points, double tol) {
    if (grid_points < 2) throw DomainError("envelope grid needs at least two points");
    IneqReport r{"EntropyEnvelope", 0, 0.0, 0, 0, tol, true};
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(grid_points - 1);
        const double h = binary_entropy(x);
        r.record(std::min(h - 2.0 * std::min(x, 1.0 - x), 2.0 * std::sqrt(x * (1.0 - x)) - h));
    }
    return r;
}

}  // namespace qdm
