#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qdm/linalg.hpp"
#include "qdm/matrix.hpp"
#include "qdm/random.hpp"

namespace qdm {

// Normalized state vector.
class PureState {
public:
    explicit PureState(std::vector<Complex> amplitudes, const Tolerances& tol = {});

    std::size_t dim() const noexcept { return amps_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    // |psi><psi|
    ComplexMatrix projector() const { return ComplexMatrix::outer(amps_); }

private:
    std::vector<Complex> amps_;
};

// Hermitian, unit-trace, positive semidefinite matrix. Construction validates
// all three invariants and throws InvalidValue naming the first one violated.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m, const Tolerances& tol = {});
    static DensityMatrix from_pure(const PureState& psi);

    std::size_t dim() const noexcept { return m_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return m_; }

    friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

private:
    ComplexMatrix m_;
};

// weight0 * a + (1 - weight0) * b
DensityMatrix mixture(double weight0, const DensityMatrix& a, const DensityMatrix& b);

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b,
                             std::size_t cap = kDefaultDimCap);

// Probability-weighted collection of pure states of a common dimension.
class Ensemble {
public:
    using Component = std::pair<double, PureState>;

    explicit Ensemble(std::vector<Component> components, const Tolerances& tol = {});

    std::size_t dim() const noexcept { return components_.front().second.dim(); }
    const std::vector<Component>& components() const noexcept { return components_; }

private:
    std::vector<Component> components_;
};

// sum_i w_i |psi_i><psi_i|
DensityMatrix density_from_ensemble(const Ensemble& e, const Tolerances& tol = {});

// (cos a, sign * sin a). sign must be +1 or -1.
PureState polarization_state(double alpha, int sign = +1);

// Named polarizations: horizontal, vertical, and the two circular ones.
PureState horizontal();
PureState vertical();
PureState left_circular();
PureState right_circular();

// Spectral purification sum_j sqrt(l_j) |v_j> (x) |e_j> on C^N (x) C^N.
PureState purify(const DensityMatrix& rho, const Tolerances& tol = {});

// rho = G G^dagger / Tr(G G^dagger), G a dim x rank complex Gaussian matrix.
DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng);

}  // namespace qdm
