#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qdm/qdist.hpp"

namespace qdm {

// One side of one inequality lhs <= rhs, checked over many trials.
// slack = rhs - lhs; a violation is slack < -tol.
struct IneqReport {
    std::string name;
    std::size_t trials = 0;
    double worst_slack = 0.0;
    std::size_t violations = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    bool asserted = true;

    void record(double slack);
    bool passed() const { return !asserted || violations == 0; }
    // Single-line JSON record.
    std::string to_json_line() const;
};

inline constexpr double kClassicalTol = 1e-10;
inline constexpr double kQuantumTol = 1e-9;
inline constexpr double kEnvelopeTol = 1e-12;

// Random distribution pairs over m in [m_min, m_max] outcomes. Trial 0 is an
// identical pair; the rest cycle through shared-support, disjoint-support,
// near-identical and generic Dirichlet pairs.
std::vector<IneqReport> verify_classical(std::size_t trials, std::size_t m_min, std::size_t m_max,
                                         std::uint64_t seed, double tol = kClassicalTol);

// Random density-matrix pairs over dims in [d_min, d_max]. SD enters through
// the optimizer's achieved value, which is a lower bound on the true SD.
std::vector<IneqReport> verify_quantum(std::size_t trials, std::size_t d_min, std::size_t d_max,
                                       std::uint64_t seed, double tol = kQuantumTol,
                                       const SdConfig& sd_cfg = {0, 2, 150});

// 2 min(x, 1 - x) <= h(x) <= 2 sqrt(x (1 - x)) on a uniform grid of [0, 1].
IneqReport verify_entropy_envelope(std::size_t grid_points, double tol = kEnvelopeTol);

}  // namespace qdm
