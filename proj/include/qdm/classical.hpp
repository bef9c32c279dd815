#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qdm/matrix.hpp"

namespace qdm {

// Finite probability distribution: nonnegative entries summing to one.
class ProbDist {
public:
    explicit ProbDist(std::vector<double> probs, const Tolerances& tol = {});

    std::size_t size() const noexcept { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    std::span<const double> probs() const noexcept { return p_; }

    friend bool operator==(const ProbDist&, const ProbDist&) = default;

private:
    std::vector<double> p_;
};

// Two hypotheses T = 0, 1 with equal priors and outcome distributions p0, p1.
class HypothesisPair {
public:
    HypothesisPair(ProbDist p0, ProbDist p1);

    const ProbDist& p0() const noexcept { return p0_; }
    const ProbDist& p1() const noexcept { return p1_; }
    std::size_t size() const noexcept { return p0_.size(); }

    // p(x) = p0(x)/2 + p1(x)/2
    double marginal(std::size_t x) const { return 0.5 * (p0_[x] + p1_[x]); }
    // r_t(x) = p_t(x) / (2 p(x)); undefined (DomainError) where p(x) = 0.
    double posterior(int t, std::size_t x) const;

private:
    ProbDist p0_;
    ProbDist p1_;
};

// Minimal probability of error: 1/2 sum_x min(p0, p1).
double pe(const HypothesisPair& h);
// Kolmogorov (total variation) distance: 1/2 sum_x |p0 - p1|.
double kolmogorov(const HypothesisPair& h);
// Bhattacharyya coefficient: sum_x sqrt(p0 p1).
double bhattacharyya(const HypothesisPair& h);
// 1 - B as 1/2 sum_x (sqrt p0 - sqrt p1)^2, accurate when B is close to 1.
double bhattacharyya_gap(const HypothesisPair& h);
// Shannon distinguishability I(T;X) in bits, as 1 - sum_x p(x) h(r0(x)).
double shannon_dist(const HypothesisPair& h);

// Binary entropy in bits; h(0) = h(1) = 0. DomainError outside [0,1].
double binary_entropy(double p);

// g(r) = 1/2 - 1/2 sqrt(1 - r^2) on [0,1].
double envelope_g(double r);
// k(r) = 2 sqrt(r (1 - r)) on [0,1].
double envelope_k(double r);

// Every bound on SD expressible through PE, K and B.
struct SdBoundTerms {
    double lower_pe;       // 1 - h(PE)
    double lower_b;        // 1 - B
    double upper_k;        // K  (= 1 - 2 PE)
    double upper_b;        // 1 - h(1/2 - 1/2 sqrt(1 - B^2))
    double upper_b_stated; // 1 - h(1/2 - 1/2 sqrt(1 - B)); tracked, not a guaranteed bound
};

SdBoundTerms sd_bound_terms(double pe_value, double k_value, double b_value);
// Same terms from b_gap = 1 - B.
SdBoundTerms sd_bound_terms_from_gap(double pe_value, double k_value, double b_gap);

}  // namespace qdm
