#include "qdm/parity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "qdm/linalg.hpp"

namespace qdm {
namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::round(r);
}

// Tr sqrt(sqrt(a) b sqrt(a)) for unnormalized PSD blocks.
double block_fidelity(const ComplexMatrix& a, const ComplexMatrix& b) {
    return schatten1_norm(psd_sqrt(a) * psd_sqrt(b));
}

}  // namespace

ParityConfig::ParityConfig(double alpha_, int n_) : alpha(alpha_), n(n_) {
    if (n < 1) throw DomainError("parity string length must be >= 1");
    if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2)) {
        throw DomainError("parity angle must lie in [0, pi/2]");
    }
}

double ParityConfig::c() const { return std::cos(alpha); }
double ParityConfig::s() const { return std::sin(alpha); }
double ParityConfig::big_c() const { return std::cos(2.0 * alpha); }
double ParityConfig::big_s() const { return std::sin(2.0 * alpha); }

QuantumPair build_parity_states(const ParityConfig& cfg, std::size_t cap) {
    if (cfg.n >= 63 || (std::size_t{1} << cfg.n) > cap) {
        throw DimensionOverflow("parity states for n = " + std::to_string(cfg.n) +
                                " exceed dimension cap " + std::to_string(cap));
    }
    const ComplexMatrix bit_state[2] = {polarization_state(cfg.alpha, +1).projector(),
                                        polarization_state(cfg.alpha, -1).projector()};
    const std::size_t dim = std::size_t{1} << cfg.n;
    ComplexMatrix acc[2] = {ComplexMatrix(dim), ComplexMatrix(dim)};
    for (std::size_t z = 0; z < dim; ++z) {
        // Bit i of the string is bit (n-1-i) of z, so z reads left to right.
        ComplexMatrix rho_z = bit_state[(z >> (cfg.n - 1)) & 1];
        for (int i = 1; i < cfg.n; ++i) {
            rho_z = tensor_product(rho_z, bit_state[(z >> (cfg.n - 1 - i)) & 1], cap);
        }
        acc[std::popcount(z) & 1] += rho_z;
    }
    const Complex norm = 1.0 / static_cast<double>(dim / 2);
    return QuantumPair(DensityMatrix(acc[0] * norm), DensityMatrix(acc[1] * norm));
}

double parity_k(const ParityConfig& cfg) { return std::pow(std::abs(cfg.big_s()), cfg.n); }

double parity_b(const ParityConfig& cfg) {
    const double c2 = cfg.c() * cfg.c();
    const double s2 = cfg.s() * cfg.s();
    const int n = cfg.n;
    double total = 0.0;
    for (int k = 0; k <= n / 2; ++k) {
        total += binomial(n, k) *
                 std::abs(std::pow(c2, n - k) * std::pow(s2, k) - std::pow(c2, k) * std::pow(s2, n - k));
    }
    return total;
}

double parity_i2(double x) { return 1.0 - binary_entropy(x); }

double parity_sd2(double alpha) {
    if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2)) {
        throw DomainError("parity angle must lie in [0, pi/2]");
    }
    const double c2 = std::pow(std::cos(2.0 * alpha), 2);
    const double s2 = std::pow(std::sin(2.0 * alpha), 2);
    return 0.5 * (1.0 + c2) * parity_i2(c2 / (1.0 + c2)) + 0.5 * s2;
}

ParityBlocks block_decompose(const ParityConfig& cfg) {
    const int n = cfg.n;
    const double c = cfg.c();
    const double s = cfg.s();
    const double off = std::pow(c, n) * std::pow(s, n);
    ParityBlocks out{n, {}};
    for (int k = 0; k <= n / 2; ++k) {
        const double upper = std::pow(c, 2 * (n - k)) * std::pow(s, 2 * k);
        const double lower = std::pow(c, 2 * k) * std::pow(s, 2 * (n - k));
        const double mult = (2 * k < n) ? binomial(n, k) : binomial(n, k) / 2.0;
        out.blocks.push_back({k, ComplexMatrix{{upper, off}, {off, lower}},
                              ComplexMatrix{{upper, -off}, {-off, lower}}, mult});
    }
    return out;
}

double ParityBlocks::total_trace(int parity) const {
    double t = 0.0;
    for (const auto& b : blocks) t += b.multiplicity * (parity == 0 ? b.sigma0 : b.sigma1).trace().real();
    return t;
}

std::vector<double> ParityBlocks::spectrum(int parity) const {
    std::vector<double> values;
    for (const auto& b : blocks) {
        const auto eig = hermitian_eig(parity == 0 ? b.sigma0 : b.sigma1);
        const auto copies = static_cast<long>(std::lround(b.multiplicity));
        for (long i = 0; i < copies; ++i) values.insert(values.end(), eig.values.begin(), eig.values.end());
    }
    std::sort(values.begin(), values.end());
    return values;
}

double ParityBlocks::bhattacharyya_sum() const {
    double total = 0.0;
    for (const auto& b : blocks) total += b.multiplicity * block_fidelity(b.sigma0, b.sigma1);
    return total;
}

double parity_sd2_block_search(double alpha, const SdConfig& cfg, const Tolerances& tol) {
    const ParityBlocks blocks = block_decompose(ParityConfig(alpha, 2));
    double total = 0.0;
    for (const auto& b : blocks.blocks) {
        const double t0 = b.sigma0.trace().real();
        const double t1 = b.sigma1.trace().real();
        if (b.multiplicity * t0 <= 1e-15) continue;
        const QuantumPair block_pair(DensityMatrix(b.sigma0 * Complex{1.0 / t0}, tol),
                                     DensityMatrix(b.sigma1 * Complex{1.0 / t1}, tol));
        total += b.multiplicity * t0 * sd_optimize(block_pair, cfg, tol).value;
    }
    return total;
}

std::vector<double> figure_alpha_grid(std::size_t points) {
    if (points < 2) throw DomainError("figure grid needs at least two points");
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = std::numbers::pi / 4 * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return grid;
}

std::vector<FigureRow> emit_figure_data(std::span<const double> alpha_grid) {
    std::vector<FigureRow> rows;
    rows.reserve(alpha_grid.size());
    for (double alpha : alpha_grid) {
        if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 4 + 1e-15)) {
            throw DomainError("figure angles must lie in [0, pi/4]");
        }
        const ParityConfig cfg(alpha, 2);
        const double k = parity_k(cfg);
        const SdBoundTerms t = sd_bound_terms(0.5 - 0.5 * k, k, parity_b(cfg));
        rows.push_back({alpha, t.lower_pe, parity_sd2(alpha), t.upper_k, t.lower_b, t.upper_b});
    }
    return rows;
}

void write_figure_csv(std::ostream& out, std::span<const FigureRow> rows) {
    out << kFigureHeader << '\n';
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g,%.15g,%.15g,%.15g\n", r.alpha, r.sd_lower_pe,
                      r.sd_parmi, r.sd_upper_k, r.sd_lower_b, r.sd_upper_b);
        out << buf;
    }
}

}  // namespace qdm
