#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "qdm/qdist.hpp"

namespace qdm {

// Parity-bit encoding: each bit b of an n-bit string is sent as the
// polarization state (cos a, (-1)^b sin a); rho_j averages the string states
// of parity j.
struct ParityConfig {
    double alpha;
    int n;

    ParityConfig(double alpha, int n);

    double c() const;
    double s() const;
    double big_c() const;  // cos 2a
    double big_s() const;  // sin 2a
};

// rho_j = 2^{-(n-1)} sum over strings z of parity j of rho_{z_1} (x) ... (x) rho_{z_n}.
// Throws DimensionOverflow if 2^n exceeds `cap`.
QuantumPair build_parity_states(const ParityConfig& cfg, std::size_t cap = kDefaultDimCap);

// |sin 2a|^n
double parity_k(const ParityConfig& cfg);
// sum_{k=0}^{floor(n/2)} binom(n,k) |c^{2(n-k)} s^{2k} - c^{2k} s^{2(n-k)}|
double parity_b(const ParityConfig& cfg);

// I2(x) = 1 - h(x).
double parity_i2(double x);
// SD of the n = 2 pair: (1 + C^2)/2 * I2(C^2 / (1 + C^2)) + S^2 / 2.
double parity_sd2(double alpha);

struct ParityBlock {
    int k;
    ComplexMatrix sigma0;  // even parity, off-diagonal +c^n s^n
    ComplexMatrix sigma1;  // odd parity, off-diagonal -c^n s^n
    // Number of 2x2 blocks of this shape (k or its mirror n-k) in each state.
    double multiplicity;
};

struct ParityBlocks {
    int n;
    std::vector<ParityBlock> blocks;

    // Trace of the weighted direct sum for one parity (1 for valid blocks).
    double total_trace(int parity) const;
    // Ascending spectrum of the weighted direct sum for one parity.
    std::vector<double> spectrum(int parity) const;
    // Sum of multiplicity * Tr sqrt(sqrt(s0) s1 sqrt(s0)) over blocks.
    double bhattacharyya_sum() const;
};

ParityBlocks block_decompose(const ParityConfig& cfg);

// SD of the n = 2 pair from independent optimizations inside each 2x2 block.
double parity_sd2_block_search(double alpha, const SdConfig& cfg = {}, const Tolerances& tol = {});

struct FigureRow {
    double alpha;
    double sd_lower_pe;  // 1 - h(1/2 - 1/4 Tr|rho0 - rho1|)
    double sd_parmi;
    double sd_upper_k;   // 1/2 Tr|rho0 - rho1|
    double sd_lower_b;   // 1 - B
    double sd_upper_b;   // 1 - h(1/2 - 1/2 sqrt(1 - B^2))
};

inline constexpr const char* kFigureHeader =
    "alpha,sd_lower_pe,sd_parmi,sd_upper_k,sd_lower_b,sd_upper_b";

// Uniform grid of `points` angles over [0, pi/4], endpoints included.
std::vector<double> figure_alpha_grid(std::size_t points = 200);

// Bounds and exact SD for the n = 2 parity pair at each angle in [0, pi/4].
std::vector<FigureRow> emit_figure_data(std::span<const double> alpha_grid);

void write_figure_csv(std::ostream& out, std::span<const FigureRow> rows);

}  // namespace qdm
