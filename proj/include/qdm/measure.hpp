#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdm/classical.hpp"
#include "qdm/states.hpp"

namespace qdm {

// Ordered PSD operators E_1..E_m summing to the identity.
class Povm {
public:
    explicit Povm(std::vector<ComplexMatrix> elements, const Tolerances& tol = {});

    std::size_t dim() const noexcept { return elements_.front().dim(); }
    std::size_t outcomes() const noexcept { return elements_.size(); }
    const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
    const ComplexMatrix& operator[](std::size_t x) const { return elements_[x]; }

    friend bool operator==(const Povm&, const Povm&) = default;

private:
    std::vector<ComplexMatrix> elements_;
};

// Born rule: outcome x has probability Tr(rho E_x).
ProbDist apply(const Povm& povm, const DensityMatrix& rho, const Tolerances& tol = {});

// Induced pair of outcome distributions.
HypothesisPair apply(const Povm& povm, const DensityMatrix& rho0, const DensityMatrix& rho1,
                     const Tolerances& tol = {});

// Two-outcome projective measurement along polarization angle alpha.
Povm make_polarization_pvm(double alpha);

// Symmetric three-outcome trine measurement on a qubit.
Povm make_trine();

// Rank-one projective measurement onto the columns of a unitary.
Povm basis_pvm(const ComplexMatrix& unitary, const Tolerances& tol = {});

// True iff E_x E_y = delta(x,y) E_x for all pairs within tol.eig.
bool is_pvm(const Povm& povm, const Tolerances& tol = {});

// Where eigenvalues of rho0 - rho1 within tol.psd of zero go.
enum class ZeroEigenspace { kFirst, kSecond };

// Helstrom measurement: E_1 projects onto the non-negative eigenspace of
// rho0 - rho1, E_2 = I - E_1. When rho0 - rho1 vanishes the computational
// basis split {|0><0|, I - |0><0|} is returned instead.
Povm helstrom_pvm(const DensityMatrix& rho0, const DensityMatrix& rho1, const Tolerances& tol = {},
                  ZeroEigenspace zeros = ZeroEigenspace::kFirst);

// E_x = S^{-1/2} A_x S^{-1/2}, A_x = G_x G_x^dagger random PSD, S = sum_x A_x.
Povm random_povm(std::size_t dim, std::size_t m, std::uint64_t seed);

}  // namespace qdm
