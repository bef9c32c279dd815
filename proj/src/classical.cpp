#include "qdm/classical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdm/error.hpp"

namespace qdm {

ProbDist::ProbDist(std::vector<double> probs, const Tolerances& tol) : p_(std::move(probs)) {
    if (p_.empty()) throw InvalidValue("non-empty", "distribution has no outcomes");
    double total = 0.0;
    for (double x : p_) {
        if (!std::isfinite(x)) throw InvalidValue("finite", "distribution has non-finite entries");
        if (x < 0.0) throw InvalidValue("nonnegative", "distribution has a negative entry");
        total += x;
    }
    if (std::abs(total - 1.0) > tol.eig) {
        throw InvalidValue("normalized", "distribution sums to " + std::to_string(total));
    }
}

HypothesisPair::HypothesisPair(ProbDist p0, ProbDist p1) : p0_(std::move(p0)), p1_(std::move(p1)) {
    if (p0_.size() != p1_.size()) {
        throw DimensionMismatch("distributions have " + std::to_string(p0_.size()) + " and " +
                                std::to_string(p1_.size()) + " outcomes");
    }
}

double HypothesisPair::posterior(int t, std::size_t x) const {
    const double px = marginal(x);
    if (px == 0.0) throw DomainError("posterior undefined at a zero-probability outcome");
    return 0.5 * (t == 0 ? p0_[x] : p1_[x]) / px;
}

double pe(const HypothesisPair& h) {
    double s = 0.0;
    for (std::size_t x = 0; x < h.size(); ++x) s += std::min(h.p0()[x], h.p1()[x]);
    return 0.5 * s;
}

double kolmogorov(const HypothesisPair& h) {
    double s = 0.0;
    for (std::size_t x = 0; x < h.size(); ++x) s += std::abs(h.p0()[x] - h.p1()[x]);
    return 0.5 * s;
}

double bhattacharyya(const HypothesisPair& h) {
    double s = 0.0;
    for (std::size_t x = 0; x < h.size(); ++x) s += std::sqrt(h.p0()[x] * h.p1()[x]);
    return s;
}

double bhattacharyya_gap(const HypothesisPair& h) {
    double s = 0.0;
    for (std::size_t x = 0; x < h.size(); ++x) {
        const double d = std::sqrt(h.p0()[x]) - std::sqrt(h.p1()[x]);
        s += d * d;
    }
    return 0.5 * s;
}

double shannon_dist(const HypothesisPair& h) {
    double s = 0.0;
    for (std::size_t x = 0; x < h.size(); ++x) {
        const double px = h.marginal(x);
        if (px == 0.0) continue;
        s += px * binary_entropy(std::clamp(h.posterior(0, x), 0.0, 1.0));
    }
    return std::clamp(1.0 - s, 0.0, 1.0);
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary entropy argument outside [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double envelope_g(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("g argument outside [0,1]");
    return 0.5 - 0.5 * std::sqrt(1.0 - r * r);
}

double envelope_k(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("k argument outside [0,1]");
    return 2.0 * std::sqrt(r * (1.0 - r));
}

SdBoundTerms sd_bound_terms(double pe_value, double k_value, double b_value) {
    return sd_bound_terms_from_gap(pe_value, k_value, 1.0 - b_value);
}

SdBoundTerms sd_bound_terms_from_gap(double pe_value, double k_value, double b_gap) {
    const double pe_c = std::clamp(pe_value, 0.0, 0.5);
    const double gap = std::clamp(b_gap, 0.0, 1.0);
    SdBoundTerms t{};
    t.lower_pe = 1.0 - binary_entropy(pe_c);
    t.lower_b = gap;
    t.upper_k = k_value;
    // 1 - B^2 = gap (2 - gap), without cancellation near B = 1.
    t.upper_b = 1.0 - binary_entropy(0.5 - 0.5 * std::sqrt(gap * (2.0 - gap)));
    t.upper_b_stated = 1.0 - binary_entropy(0.5 - 0.5 * std::sqrt(gap));
    return t;
}

}  // namespace qdm
