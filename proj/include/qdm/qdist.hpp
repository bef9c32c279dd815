#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "qdm/measure.hpp"
#include "qdm/states.hpp"

namespace qdm {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Two equiprobable density matrices of the same dimension.
class QuantumPair {
public:
    QuantumPair(DensityMatrix rho0, DensityMatrix rho1);

    const DensityMatrix& rho0() const noexcept { return rho0_; }
    const DensityMatrix& rho1() const noexcept { return rho1_; }
    std::size_t dim() const noexcept { return rho0_.dim(); }
    // rho0 - rho1
    ComplexMatrix difference() const { return rho0_.matrix() - rho1_.matrix(); }

private:
    DensityMatrix rho0_;
    DensityMatrix rho1_;
};

// 1/2 - 1/4 Tr|rho0 - rho1|
double q_pe(const QuantumPair& pair, const Tolerances& tol = {});
// 1/2 Tr|rho0 - rho1|
double q_kolmogorov(const QuantumPair& pair, const Tolerances& tol = {});
// Tr sqrt(sqrt(rho0) rho1 sqrt(rho0)), evaluated as the trace norm of
// sqrt(rho0) sqrt(rho1) (same singular values, no second square root).
double q_bhattacharyya(const DensityMatrix& rho0, const DensityMatrix& rho1, const Tolerances& tol = {});
double q_bhattacharyya(const QuantumPair& pair, const Tolerances& tol = {});

struct OverlapResult {
    double value = 0.0;     // best |<phi0|(I (x) U)|phi1>| found
    bool converged = false; // false: budget exhausted before the step size collapsed
    std::size_t evaluations = 0;
};

struct OverlapConfig {
    std::size_t samples = 512;      // Haar-random ancilla unitaries
    std::size_t refine_steps = 4000; // local hill-climbing steps around the best sample
    std::uint64_t seed = kDefaultSeed;
};

// Maximum of |<phi0|(I (x) U)|phi1>| over ancilla unitaries U, with phi0, phi1
// the canonical purifications. Never exceeds q_bhattacharyya beyond round-off.
OverlapResult overlap_search(const QuantumPair& pair, const OverlapConfig& cfg = {},
                             const Tolerances& tol = {});

struct SdBounds {
    double lower;  // max(1 - h(PE), 1 - B)
    double upper;  // min(K, 1 - h(1/2 - 1/2 sqrt(1 - B^2)))
    SdBoundTerms terms;
};

SdBounds sd_bounds(const QuantumPair& pair, const Tolerances& tol = {});

struct SdConfig {
    std::size_t outcomes = 0;    // 0 selects dim + 1
    std::size_t restarts = 8;    // random starting measurements
    std::size_t iterations = 400;
    std::uint64_t seed = kDefaultSeed;
    bool grid_floor = true;      // dim-2 projective angle grid
    std::size_t grid_points = 2000;
};

struct SdEstimate {
    double value;  // classical SD of `povm`; a certified lower bound on the quantum SD
    Povm povm;
    std::pair<double, double> lower_bounds;  // (1 - h(PE), 1 - B)
    std::pair<double, double> upper_bounds;  // (K, 1 - h(g(B)))
    bool converged;
};

// Multi-start maximization of the mutual information over rank-one POVMs.
SdEstimate sd_optimize(const QuantumPair& pair, const SdConfig& cfg = {}, const Tolerances& tol = {});

// Measurement whose outcome distributions attain the quantum Bhattacharyya
// coefficient: eigenbasis of rho^{-1/2} sqrt(sqrt(rho) sigma sqrt(rho)) rho^{-1/2}
// taken about whichever state is better conditioned. nullopt if both states are
// singular.
std::optional<Povm> fidelity_measurement(const QuantumPair& pair, const Tolerances& tol = {});

// |B(r0 (x) r1, r2 (x) r3) - B(r0, r2) B(r1, r3)|
double check_b_multiplicative(const DensityMatrix& r0, const DensityMatrix& r1,
                              const DensityMatrix& r2, const DensityMatrix& r3,
                              const Tolerances& tol = {});

struct ConcavitySlack {
    double squared;  // B(rho, mix)^2 - [mu0 B(rho, rho0)^2 + mu1 B(rho, rho1)^2]
    double doubly;   // B(mu0 rho0 + mu1 rho1, rho) - [mu0 B(rho0, rho) + mu1 B(rho1, rho)]
};

// Squared-concavity slack in the second argument, plus the joint-concavity
// slack with rho repeated in the second slot. mu1 = 1 - mu0.
ConcavitySlack check_b_concavity(const DensityMatrix& rho, const DensityMatrix& rho0,
                                 const DensityMatrix& rho1, double mu0, const Tolerances& tol = {});

// B(mu0 r0 + mu1 r1, mu0 r2 + mu1 r3) - [mu0 B(r0, r2) + mu1 B(r1, r3)]
double check_b_joint_concavity(const DensityMatrix& r0, const DensityMatrix& r1,
                               const DensityMatrix& r2, const DensityMatrix& r3, double mu0,
                               const Tolerances& tol = {});

}  // namespace qdm
