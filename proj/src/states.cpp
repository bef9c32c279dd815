#include "qdm/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qdm {

PureState::PureState(std::vector<Complex> amplitudes, const Tolerances& tol)
    : amps_(std::move(amplitudes)) {
    if (amps_.empty()) throw InvalidValue("dimension", "pure state must have dim >= 1");
    double n2 = 0.0;
    for (const auto& z : amps_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw NonFinite("pure state has non-finite amplitudes");
        }
        n2 += std::norm(z);
    }
    if (std::abs(std::sqrt(n2) - 1.0) > tol.eig) {
        throw InvalidValue("unit-norm", "state vector norm " + std::to_string(std::sqrt(n2)) +
                                            " is not 1");
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix m, const Tolerances& tol) : m_(std::move(m)) {
    if (m_.dim() == 0) throw InvalidValue("dimension", "density matrix must have dim >= 1");
    if (!m_.all_finite()) throw InvalidValue("finite", "density matrix has non-finite entries");
    if (!m_.is_hermitian(tol.herm)) {
        throw InvalidValue("hermitian", "density matrix is not Hermitian");
    }
    const Complex tr = m_.trace();
    if (std::abs(tr - Complex{1.0}) > tol.eig) {
        throw InvalidValue("unit-trace",
                           "density matrix trace " + std::to_string(tr.real()) + " is not 1");
    }
    const auto eig = hermitian_eig(m_, tol);
    if (eig.values.front() < -tol.psd) {
        throw InvalidValue("positive-semidefinite",
                           "density matrix has eigenvalue " + std::to_string(eig.values.front()));
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) { return DensityMatrix(psi.projector()); }

DensityMatrix mixture(double weight0, const DensityMatrix& a, const DensityMatrix& b) {
    if (weight0 < 0.0 || weight0 > 1.0) throw DomainError("mixture weight outside [0,1]");
    return DensityMatrix(a.matrix() * Complex{weight0} + b.matrix() * Complex{1.0 - weight0});
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b, std::size_t cap) {
    return DensityMatrix(tensor_product(a.matrix(), b.matrix(), cap));
}

Ensemble::Ensemble(std::vector<Component> components, const Tolerances& tol)
    : components_(std::move(components)) {
    if (components_.empty()) throw InvalidEnsemble("ensemble has no components");
    double total = 0.0;
    for (const auto& [w, psi] : components_) {
        if (!(w >= 0.0)) throw InvalidEnsemble("ensemble weight is negative");
        if (psi.dim() != components_.front().second.dim()) {
            throw InvalidEnsemble("ensemble components differ in dimension");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > tol.eig) {
        throw InvalidEnsemble("ensemble weights sum to " + std::to_string(total));
    }
}

DensityMatrix density_from_ensemble(const Ensemble& e, const Tolerances& tol) {
    ComplexMatrix m(e.dim());
    for (const auto& [w, psi] : e.components()) m += psi.projector() * Complex{w};
    return DensityMatrix(std::move(m), tol);
}

PureState polarization_state(double alpha, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("polarization sign must be +1 or -1");
    const double a = std::remainder(alpha, 2.0 * std::numbers::pi);
    return PureState({std::cos(a), sign * std::sin(a)});
}

PureState horizontal() { return PureState({1.0, 0.0}); }
PureState vertical() { return PureState({0.0, 1.0}); }
PureState left_circular() {
    return PureState({std::numbers::sqrt2 / 2, Complex{0.0, std::numbers::sqrt2 / 2}});
}
PureState right_circular() {
    return PureState({std::numbers::sqrt2 / 2, Complex{0.0, -std::numbers::sqrt2 / 2}});
}

PureState purify(const DensityMatrix& rho, const Tolerances& tol) {
    const std::size_t n = rho.dim();
    const auto eig = hermitian_eig(rho.matrix(), tol);
    if (eig.values.front() < -tol.psd) throw NotPsd("cannot purify a non-PSD matrix");
    // Largest eigenvalue first so that a pure input maps to |psi> (x) |e_0>.
    // Round-off eigenvalues of a rank-deficient input would otherwise add
    // amplitudes of order sqrt(eps).
    const double floor = spectral_noise_floor(eig);
    std::vector<Complex> phi(n * n);
    for (std::size_t rank = 0; rank < n; ++rank) {
        const std::size_t j = n - 1 - rank;
        if (eig.values[j] <= floor) continue;
        const double w = std::sqrt(eig.values[j]);
        for (std::size_t r = 0; r < n; ++r) phi[r * n + rank] = w * eig.vectors(r, j);
    }
    // Renormalize away the clamped round-off.
    double n2 = 0.0;
    for (const auto& z : phi) n2 += std::norm(z);
    for (auto& z : phi) z /= std::sqrt(n2);
    return PureState(std::move(phi), tol);
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng) {
    if (rank == 0 || rank > dim) throw DomainError("random_density rank must be in [1, dim]");
    ComplexMatrix g(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < rank; ++c) g(r, c) = rng.complex_normal();
    ComplexMatrix m = g * g.adjoint();
    const double tr = m.trace().real();
    m *= Complex{1.0 / tr};
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = m(i, i).real();
    // Exact Hermitian symmetry.
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = r + 1; c < dim; ++c) m(c, r) = std::conj(m(r, c));
    return DensityMatrix(std::move(m));
}

}  // namespace qdm
