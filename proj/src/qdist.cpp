#include "qdm/qdist.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qdm/linalg.hpp"
#include "qdm/random.hpp"

namespace qdm {

QuantumPair::QuantumPair(DensityMatrix rho0, DensityMatrix rho1)
    : rho0_(std::move(rho0)), rho1_(std::move(rho1)) {
    if (rho0_.dim() != rho1_.dim()) {
        throw DimensionMismatch("state pair has dims " + std::to_string(rho0_.dim()) + " and " +
                                std::to_string(rho1_.dim()));
    }
}

double q_kolmogorov(const QuantumPair& pair, const Tolerances& tol) {
    return std::clamp(0.5 * trace_norm(pair.difference(), tol), 0.0, 1.0);
}

double q_pe(const QuantumPair& pair, const Tolerances& tol) {
    return std::clamp(0.5 - 0.25 * trace_norm(pair.difference(), tol), 0.0, 0.5);
}

double q_bhattacharyya(const DensityMatrix& rho0, const DensityMatrix& rho1, const Tolerances& tol) {
    if (rho0.dim() != rho1.dim()) throw DimensionMismatch("fidelity of states of differing dims");
    const ComplexMatrix product = psd_sqrt(rho0.matrix(), tol) * psd_sqrt(rho1.matrix(), tol);
    return std::clamp(schatten1_norm(product), 0.0, 1.0);
}

double q_bhattacharyya(const QuantumPair& pair, const Tolerances& tol) {
    return q_bhattacharyya(pair.rho0(), pair.rho1(), tol);
}

// ---------------------------------------------------------------------------
// overlap search

namespace {

ComplexMatrix polar_unitary(const ComplexMatrix& v) {
    return v * pd_inverse_sqrt(v.adjoint() * v);
}

}  // namespace

OverlapResult overlap_search(const QuantumPair& pair, const OverlapConfig& cfg, const Tolerances& tol) {
    const std::size_t n = pair.dim();
    const PureState phi0 = purify(pair.rho0(), tol);
    const PureState phi1 = purify(pair.rho1(), tol);
    const auto a0 = phi0.amplitudes();
    const auto a1 = phi1.amplitudes();

    OverlapResult result;
    // |<phi0| (I (x) U) |phi1>|, applying U to each ancilla block.
    auto overlap = [&](const ComplexMatrix& u) {
        ++result.evaluations;
        Complex s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                Complex uk = 0.0;
                for (std::size_t l = 0; l < n; ++l) uk += u(k, l) * a1[i * n + l];
                s += std::conj(a0[i * n + k]) * uk;
            }
        return std::abs(s);
    };

    Rng rng(cfg.seed);
    ComplexMatrix best_u = ComplexMatrix::identity(n);
    double best = overlap(best_u);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        ComplexMatrix u = haar_unitary(n, rng);
        const double v = overlap(u);
        if (v > best) {
            best = v;
            best_u = std::move(u);
        }
    }

    double step = 0.3;
    for (std::size_t i = 0; i < cfg.refine_steps; ++i) {
        if (step < 1e-10) {
            result.converged = true;
            break;
        }
        ComplexMatrix trial = polar_unitary(best_u + gaussian_matrix(n, rng) * Complex{step});
        const double v = overlap(trial);
        if (v > best) {
            best = v;
            best_u = std::move(trial);
            step *= 1.5;
        } else {
            step *= 0.9;
        }
    }
    result.value = best;
    return result;
}

// ---------------------------------------------------------------------------
// bounds

SdBounds sd_bounds(const QuantumPair& pair, const Tolerances& tol) {
    const double k = q_kolmogorov(pair, tol);
    const double pe_value = 0.5 - 0.5 * k;
    const double b = q_bhattacharyya(pair, tol);
    const SdBoundTerms t = sd_bound_terms(pe_value, k, b);
    return {std::max(t.lower_pe, t.lower_b), std::min(t.upper_k, t.upper_b), t};
}

// ---------------------------------------------------------------------------
// Shannon distinguishability optimizer
//
// A rank-one POVM with m outcomes is a list of vectors w_x with
// sum_x w_x w_x^dagger = I, i.e. a point on the complex Stiefel manifold.
// Ascent steps follow the projected gradient of I(T;X) and are pulled back to
// the manifold by w_x <- S^{-1/2} w_x, S = sum_x w_x w_x^dagger.

namespace {

using Vec = std::vector<Complex>;
using Frame = std::vector<Vec>;

struct Objective {
    const ComplexMatrix& rho0;
    const ComplexMatrix& rho1;

    double value(const Frame& w) const {
        double total = 0.0;
        for (const auto& wx : w) {
            const double p0 = std::max(inner(wx, rho0.apply(wx)).real(), 0.0);
            const double p1 = std::max(inner(wx, rho1.apply(wx)).real(), 0.0);
            const double p = 0.5 * (p0 + p1);
            if (p <= 0.0) continue;
            if (p0 > 0.0) total += 0.5 * p0 * std::log2(p0 / p);
            if (p1 > 0.0) total += 0.5 * p1 * std::log2(p1 / p);
        }
        return total;
    }

    // Riemannian gradient direction xi_x = D_x - H w_x.
    Frame gradient(const Frame& w, double& norm2) const {
        const std::size_t d = rho0.dim();
        Frame dvec(w.size(), Vec(d));
        for (std::size_t x = 0; x < w.size(); ++x) {
            const Vec u0 = rho0.apply(w[x]);
            const Vec u1 = rho1.apply(w[x]);
            const double p0 = std::max(inner(w[x], u0).real(), 0.0);
            const double p1 = std::max(inner(w[x], u1).real(), 0.0);
            const double p = 0.5 * (p0 + p1);
            if (p <= 0.0) continue;
            const double l0 = p0 > 0.0 ? 0.5 * std::log2(p0 / p) : 0.0;
            const double l1 = p1 > 0.0 ? 0.5 * std::log2(p1 / p) : 0.0;
            for (std::size_t i = 0; i < d; ++i) dvec[x][i] = l0 * u0[i] + l1 * u1[i];
        }
        ComplexMatrix h(d);
        for (std::size_t x = 0; x < w.size(); ++x)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    h(i, j) += 0.5 * (w[x][i] * std::conj(dvec[x][j]) + dvec[x][i] * std::conj(w[x][j]));
        norm2 = 0.0;
        for (std::size_t x = 0; x < w.size(); ++x) {
            const Vec hw = h.apply(w[x]);
            for (std::size_t i = 0; i < d; ++i) {
                dvec[x][i] -= hw[i];
                norm2 += std::norm(dvec[x][i]);
            }
        }
        return dvec;
    }
};

// w_x <- S^{-1/2} w_x
Frame retract(Frame w) {
    const std::size_t d = w.front().size();
    ComplexMatrix s(d);
    for (const auto& wx : w) s += ComplexMatrix::outer(wx);
    const ComplexMatrix t = pd_inverse_sqrt(s);
    for (auto& wx : w) wx = t.apply(wx);
    return w;
}

struct AscentResult {
    Frame frame;
    double value;
    bool stationary;
};

AscentResult ascend(const Objective& f, Frame w, std::size_t iterations) {
    double value = f.value(w);
    double step = 1.0;
    for (std::size_t it = 0; it < iterations; ++it) {
        double g2 = 0.0;
        const Frame g = f.gradient(w, g2);
        if (g2 < 1e-22) return {std::move(w), value, true};
        for (;;) {
            Frame trial = w;
            for (std::size_t x = 0; x < w.size(); ++x)
                for (std::size_t i = 0; i < trial[x].size(); ++i) trial[x][i] += step * g[x][i];
            trial = retract(std::move(trial));
            const double v = f.value(trial);
            if (v > value) {
                w = std::move(trial);
                value = v;
                step *= 1.5;
                break;
            }
            step *= 0.5;
            if (step < 1e-14) return {std::move(w), value, true};
        }
    }
    return {std::move(w), value, false};
}

Frame basis_frame(const ComplexMatrix& unitary, std::size_t m) {
    const std::size_t d = unitary.dim();
    Frame w(m, Vec(d));
    for (std::size_t j = 0; j < d && j < m; ++j)
        for (std::size_t r = 0; r < d; ++r) w[j][r] = unitary(r, j);
    return w;
}

Frame random_frame(std::size_t m, std::size_t d, Rng& rng) {
    Frame w(m, Vec(d));
    for (auto& wx : w)
        for (auto& z : wx) z = rng.complex_normal();
    return retract(std::move(w));
}

// Bloch vector of a qubit state.
std::array<double, 3> bloch(const ComplexMatrix& rho) {
    return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

// Best two-outcome projective measurement on a great circle of the Bloch
// sphere through both states' Bloch vectors, as an orthonormal basis.
ComplexMatrix qubit_grid_basis(const QuantumPair& pair, std::size_t points) {
    using V3 = std::array<double, 3>;
    const V3 r0 = bloch(pair.rho0().matrix());
    const V3 r1 = bloch(pair.rho1().matrix());
    auto dot = [](const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
    auto norm = [&](const V3& a) { return std::sqrt(dot(a, a)); };

    V3 e1 = norm(r0) > 1e-12 ? r0 : (norm(r1) > 1e-12 ? r1 : V3{0.0, 0.0, 1.0});
    const double n1 = norm(e1);
    for (auto& c : e1) c /= n1;
    V3 e2 = r1;
    const double along = dot(e2, e1);
    for (int i = 0; i < 3; ++i) e2[i] -= along * e1[i];
    if (norm(e2) < 1e-12) {
        // Collinear: any direction orthogonal to e1.
        const V3 trial = std::abs(e1[0]) < 0.9 ? V3{1.0, 0.0, 0.0} : V3{0.0, 1.0, 0.0};
        const double t = dot(trial, e1);
        for (int i = 0; i < 3; ++i) e2[i] = trial[i] - t * e1[i];
    }
    const double n2 = norm(e2);
    for (auto& c : e2) c /= n2;

    double best_value = -1.0;
    V3 best_dir = e1;
    for (std::size_t i = 0; i < points; ++i) {
        const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(points);
        V3 dir;
        for (int k = 0; k < 3; ++k) dir[k] = std::cos(theta) * e1[k] + std::sin(theta) * e2[k];
        const double a = std::clamp(0.5 * (1.0 + dot(r0, dir)), 0.0, 1.0);
        const double b = std::clamp(0.5 * (1.0 + dot(r1, dir)), 0.0, 1.0);
        const HypothesisPair h(ProbDist({a, 1.0 - a}), ProbDist({b, 1.0 - b}));
        const double v = shannon_dist(h);
        if (v > best_value) {
            best_value = v;
            best_dir = dir;
        }
    }
    // Eigenvectors of dir . sigma.
    const double beta = std::acos(std::clamp(best_dir[2], -1.0, 1.0));
    const double phi = std::atan2(best_dir[1], best_dir[0]);
    const Complex e = std::polar(1.0, phi);
    return ComplexMatrix{{std::cos(beta / 2), std::sin(beta / 2)},
                         {e * std::sin(beta / 2), -e * std::cos(beta / 2)}};
}

Povm frame_to_povm(const Frame& w, const Tolerances& tol) {
    std::vector<ComplexMatrix> elems;
    elems.reserve(w.size());
    for (const auto& wx : w) {
        ComplexMatrix e = ComplexMatrix::outer(wx);
        for (std::size_t i = 0; i < e.dim(); ++i) e(i, i) = e(i, i).real();
        elems.push_back(std::move(e));
    }
    return Povm(std::move(elems), tol);
}

}  // namespace

namespace {

std::optional<ComplexMatrix> fidelity_basis(const QuantumPair& pair, const Tolerances& tol) {
    const auto e0 = hermitian_eig(pair.rho0().matrix(), tol);
    const auto e1 = hermitian_eig(pair.rho1().matrix(), tol);
    const bool use0 = e0.values.front() >= e1.values.front();
    const auto& base_eig = use0 ? e0 : e1;
    const ComplexMatrix& other = use0 ? pair.rho1().matrix() : pair.rho0().matrix();
    if (base_eig.values.front() <= 1e-12) return std::nullopt;

    const ComplexMatrix root = spectral_apply(base_eig, [](double x) { return std::sqrt(x); });
    const ComplexMatrix inv_root = spectral_apply(base_eig, [](double x) { return 1.0 / std::sqrt(x); });
    ComplexMatrix inner_m = root * other * root;
    inner_m = (inner_m + inner_m.adjoint()) * Complex{0.5};
    ComplexMatrix m = inv_root * psd_sqrt(inner_m, tol) * inv_root;
    m = (m + m.adjoint()) * Complex{0.5};
    return hermitian_eig(m, tol).vectors;
}

}  // namespace

std::optional<Povm> fidelity_measurement(const QuantumPair& pair, const Tolerances& tol) {
    if (auto u = fidelity_basis(pair, tol)) return basis_pvm(*u, tol);
    return std::nullopt;
}

SdEstimate sd_optimize(const QuantumPair& pair, const SdConfig& cfg, const Tolerances& tol) {
    const std::size_t d = pair.dim();
    const std::size_t m = cfg.outcomes == 0 ? d + 1 : cfg.outcomes;
    if (m < 2) throw DomainError("sd_optimize needs at least two outcomes");

    if (m < d) throw DomainError("sd_optimize uses rank-one POVMs and needs outcomes >= dim");

    const Objective f{pair.rho0().matrix(), pair.rho1().matrix()};
    std::vector<Frame> starts;
    // Eigenbasis of rho0 - rho1 refines the Helstrom measurement.
    starts.push_back(basis_frame(hermitian_eig(pair.difference(), tol).vectors, m));
    if (auto u = fidelity_basis(pair, tol)) starts.push_back(basis_frame(*u, m));
    starts.push_back(basis_frame(hermitian_eig(pair.rho0().matrix() + pair.rho1().matrix(), tol).vectors, m));
    if (d == 2 && cfg.grid_floor) starts.push_back(basis_frame(qubit_grid_basis(pair, cfg.grid_points), m));
    Rng rng(cfg.seed);
    for (std::size_t r = 0; r < cfg.restarts; ++r) starts.push_back(random_frame(m, d, rng));

    // Fixed start order keeps the result a function of (inputs, seed) only.
    std::optional<AscentResult> best;
    for (auto& w : starts) {
        AscentResult r = ascend(f, std::move(w), cfg.iterations);
        if (!best || r.value > best->value) best = std::move(r);
    }

    const Povm povm = frame_to_povm(best->frame, tol);
    const HypothesisPair induced = apply(povm, pair.rho0(), pair.rho1(), tol);
    const SdBounds bounds = sd_bounds(pair, tol);
    return SdEstimate{shannon_dist(induced),
                      povm,
                      {bounds.terms.lower_pe, bounds.terms.lower_b},
                      {bounds.terms.upper_k, bounds.terms.upper_b},
                      best->stationary};
}

// ---------------------------------------------------------------------------
// fidelity structure

double check_b_multiplicative(const DensityMatrix& r0, const DensityMatrix& r1, const DensityMatrix& r2,
                              const DensityMatrix& r3, const Tolerances& tol) {
    const double lhs = q_bhattacharyya(tensor_product(r0, r1), tensor_product(r2, r3), tol);
    const double rhs = q_bhattacharyya(r0, r2, tol) * q_bhattacharyya(r1, r3, tol);
    return std::abs(lhs - rhs);
}

ConcavitySlack check_b_concavity(const DensityMatrix& rho, const DensityMatrix& rho0,
                                 const DensityMatrix& rho1, double mu0, const Tolerances& tol) {
    if (!(mu0 >= 0.0 && mu0 <= 1.0)) throw DomainError("mixture weight outside [0,1]");
    const double mu1 = 1.0 - mu0;
    const DensityMatrix mix = mixture(mu0, rho0, rho1);
    const double b0 = q_bhattacharyya(rho, rho0, tol);
    const double b1 = q_bhattacharyya(rho, rho1, tol);
    const double bm = q_bhattacharyya(rho, mix, tol);
    ConcavitySlack s{};
    s.squared = bm * bm - (mu0 * b0 * b0 + mu1 * b1 * b1);
    s.doubly = check_b_joint_concavity(rho0, rho1, rho, rho, mu0, tol);
    return s;
}

double check_b_joint_concavity(const DensityMatrix& r0, const DensityMatrix& r1, const DensityMatrix& r2,
                               const DensityMatrix& r3, double mu0, const Tolerances& tol) {
    if (!(mu0 >= 0.0 && mu0 <= 1.0)) throw DomainError("mixture weight outside [0,1]");
    const double mu1 = 1.0 - mu0;
    const double lhs = q_bhattacharyya(mixture(mu0, r0, r1), mixture(mu0, r2, r3), tol);
    return lhs - (mu0 * q_bhattacharyya(r0, r2, tol) + mu1 * q_bhattacharyya(r1, r3, tol));
}

}  // namespace qdm
