#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oracle.hpp"
#include "qdm/error.hpp"
#include "qdm/linalg.hpp"
#include "qdm/parity.hpp"

using namespace qdm;

namespace {

// rho_j built from scratch with Eigen: average of Kronecker products of the
// bit projectors over strings of parity j.
std::pair<oracle::Mat, oracle::Mat> brute_parity(double alpha, int n) {
    Eigen::VectorXcd bit[2];
    for (int b = 0; b < 2; ++b) {
        bit[b] = Eigen::VectorXcd(2);
        bit[b] << std::cos(alpha), (b == 0 ? 1.0 : -1.0) * std::sin(alpha);
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    oracle::Mat rho[2] = {oracle::Mat::Zero(dim, dim), oracle::Mat::Zero(dim, dim)};
    for (unsigned z = 0; z < (1u << n); ++z) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
        for (int i = 0; i < n; ++i) {
            const Eigen::VectorXcd& b = bit[(z >> i) & 1u];
            Eigen::VectorXcd next(v.size() * 2);
            for (Eigen::Index k = 0; k < v.size(); ++k) next.segment(2 * k, 2) = v(k) * b;
            v = next;
        }
        rho[std::popcount(z) & 1] += v * v.adjoint();
    }
    const double norm = 1.0 / static_cast<double>(dim / 2);
    return {rho[0] * norm, rho[1] * norm};
}

std::vector<double> alpha_grid() {
    std::vector<double> g;
    for (int i = 0; i < 25; ++i) g.push_back(std::numbers::pi / 2 * i / 24);
    return g;
}

}  // namespace

TEST_CASE("parity configuration validation") {
    CHECK_THROWS_AS(ParityConfig(0.3, 0), DomainError);
    CHECK_THROWS_AS(ParityConfig(-0.1, 2), DomainError);
    CHECK_THROWS_AS(ParityConfig(2.0, 2), DomainError);
    CHECK_THROWS_AS(build_parity_states(ParityConfig(0.3, 5), 16), DimensionOverflow);
}

TEST_CASE("parity states match the independent construction") {
    for (int n = 1; n <= 5; ++n) {
        for (double a : {0.1, 0.4, 1.0}) {
            const QuantumPair q = build_parity_states(ParityConfig(a, n));
            const auto [r0, r1] = brute_parity(a, n);
            CHECK((oracle::to_eigen(q.rho0().matrix()) - r0).cwiseAbs().maxCoeff() < 1e-14);
            CHECK((oracle::to_eigen(q.rho1().matrix()) - r1).cwiseAbs().maxCoeff() < 1e-14);
        }
    }
}

TEST_CASE("K formula against brute-force trace norms") {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        for (double a : alpha_grid()) {
            const auto [r0, r1] = brute_parity(a, n);
            worst = std::max(worst, std::abs(parity_k(ParityConfig(a, n)) - 0.5 * oracle::trace_norm(r0 - r1)));
        }
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("B block sum against brute-force fidelity") {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        for (double a : alpha_grid()) {
            const auto [r0, r1] = brute_parity(a, n);
            worst = std::max(worst, std::abs(parity_b(ParityConfig(a, n)) - oracle::fidelity(r0, r1)));
        }
    }
    CHECK(worst <= 1e-8);
    for (double a : alpha_grid()) {
        CHECK(std::abs(parity_b(ParityConfig(a, 2)) - std::abs(std::cos(2 * a))) <= 1e-12);
    }
}

TEST_CASE("examples at pi/8") {
    const ParityConfig c(std::numbers::pi / 8, 2);
    CHECK(parity_k(c) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(parity_b(c) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(parity_k(ParityConfig(std::numbers::pi / 4, 5)) == doctest::Approx(1.0));
    CHECK(parity_k(ParityConfig(0.0, 3)) == 0.0);
    CHECK(parity_b(ParityConfig(0.0, 3)) == doctest::Approx(1.0));
}

TEST_CASE("block decomposition: multiplicities, traces and spectra") {
    for (int n = 1; n <= 6; ++n) {
        for (double a : {0.2, 0.7, 1.3}) {
            const ParityBlocks pb = block_decompose(ParityConfig(a, n));
            double count = 0.0;
            for (const auto& b : pb.blocks) count += b.multiplicity;
            CHECK(count == doctest::Approx(std::ldexp(1.0, n - 1)));
            CHECK(pb.total_trace(0) == doctest::Approx(1.0).epsilon(1e-13));
            CHECK(pb.total_trace(1) == doctest::Approx(1.0).epsilon(1e-13));
            const auto [r0, r1] = brute_parity(a, n);
            const Eigen::VectorXd e0 = oracle::eigenvalues(r0);
            const Eigen::VectorXd e1 = oracle::eigenvalues(r1);
            const auto s0 = pb.spectrum(0);
            const auto s1 = pb.spectrum(1);
            REQUIRE(s0.size() == static_cast<std::size_t>(e0.size()));
            for (std::size_t i = 0; i < s0.size(); ++i) {
                CHECK(std::abs(s0[i] - e0(static_cast<Eigen::Index>(i))) <= 1e-12);
                CHECK(std::abs(s1[i] - e1(static_cast<Eigen::Index>(i))) <= 1e-12);
            }
            CHECK(std::abs(pb.bhattacharyya_sum() - parity_b(ParityConfig(a, n))) <= 1e-12);
        }
    }
}

TEST_CASE("n = 2 SD: closed form against an optimal two-pure-state search") {
    // Independent oracle: the pair restricted to the non-orthogonal block is two
    // pure states with overlap cos 2a weighted (1 + C^2)/2; the rest is perfectly
    // distinguishable. Mutual information of the symmetric projective
    // measurement in that block, plus the orthogonal block's weight.
    for (int i = 1; i < 20; ++i) {
        const double a = std::numbers::pi / 4 * i / 20;
        const double c2 = std::pow(std::cos(2 * a), 2);
        const double s2 = std::pow(std::sin(2 * a), 2);
        const double w = 0.5 * (1 + c2);
        // Pure states at overlap t: the symmetric PVM yields error probability
        // (1 - sqrt(1 - t^2)) / 2.
        const double t = 2 * std::abs(std::cos(2 * a)) / (1 + c2);
        const double err = 0.5 * (1 - std::sqrt(1 - t * t));
        const double expect = w * (1 - oracle::entropy_bits(err)) + 0.5 * s2;
        CHECK(parity_sd2(a) == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(parity_sd2(0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(parity_sd2(std::numbers::pi / 4) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(parity_i2(0.5) == 0.0);
    CHECK(parity_i2(0.0) == 1.0);
}

TEST_CASE("n = 2 SD: optimizer and block search reach the closed form") {
    for (int i = 0; i < 8; ++i) {
        const double a = std::numbers::pi / 4 * (i + 0.5) / 8;
        const double closed = parity_sd2(a);
        const SdEstimate e = sd_optimize(build_parity_states(ParityConfig(a, 2)));
        CHECK(std::abs(e.value - closed) <= 1e-4);
        CHECK(std::abs(parity_sd2_block_search(a) - closed) <= 1e-6);
    }
}

TEST_CASE("figure dataset") {
    const auto grid = figure_alpha_grid(50);
    REQUIRE(grid.size() == 50);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == doctest::Approx(std::numbers::pi / 4));
    const auto rows = emit_figure_data(grid);
    for (const auto& r : rows) {
        CHECK(r.sd_lower_pe <= r.sd_parmi + 1e-12);
        CHECK(r.sd_parmi <= r.sd_upper_k + 1e-12);
        CHECK(r.sd_lower_b <= r.sd_parmi + 1e-12);
        CHECK(r.sd_parmi <= r.sd_upper_b + 1e-12);
    }
    std::ostringstream out;
    write_figure_csv(out, rows);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "alpha,sd_lower_pe,sd_parmi,sd_upper_k,sd_lower_b,sd_upper_b");
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 50);
    const std::vector<double> bad{1.0};
    CHECK_THROWS_AS(emit_figure_data(bad), DomainError);
}
