#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qdm/matrix.hpp"

namespace qdm {

// Spectral decomposition M = V diag(values) V^dagger of a Hermitian matrix.
// Eigenvalues are ascending; column j of `vectors` belongs to values[j].
struct EigenDecomposition {
    std::vector<double> values;
    ComplexMatrix vectors;

    std::vector<Complex> vector(std::size_t j) const;
    ComplexMatrix reconstruct() const;
};

inline constexpr int kMaxJacobiSweeps = 100;

// Cyclic Jacobi eigensolver. Throws NotHermitian if |M - M^dagger|_max exceeds
// tol.herm and NoConvergence if `max_sweeps` sweeps do not diagonalize M.
EigenDecomposition hermitian_eig(const ComplexMatrix& m, const Tolerances& tol = {},
                                 int max_sweeps = kMaxJacobiSweeps);

// V f(diag) V^dagger for a Hermitian matrix.
ComplexMatrix spectral_apply(const EigenDecomposition& eig, const std::function<double(double)>& f);

// Eigenvalue below which a spectrum entry is indistinguishable from round-off.
double spectral_noise_floor(const EigenDecomposition& eig);

// Unique PSD square root. Eigenvalues in [-tol.psd, noise floor] are treated as
// zero; anything below -tol.psd throws NotPsd.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerances& tol = {});

// True iff every eigenvalue of the Hermitian matrix exceeds -shift, decided by
// a Cholesky factorization of M + shift I.
bool eigenvalues_above(const ComplexMatrix& m, double shift);

// S^{-1/2} for positive definite S. Throws NotPsd if S is singular at noise level.
ComplexMatrix pd_inverse_sqrt(const ComplexMatrix& m, const Tolerances& tol = {});

// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m, const Tolerances& tol = {});

// Singular values of an arbitrary square matrix, descending (one-sided Jacobi).
std::vector<double> singular_values(const ComplexMatrix& m, int max_sweeps = kMaxJacobiSweeps);

// Sum of singular values of an arbitrary square matrix.
double schatten1_norm(const ComplexMatrix& m);

// Kronecker product A (x) B. Throws DimensionOverflow when dim(A)*dim(B) > cap.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             std::size_t cap = kDefaultDimCap);

std::vector<Complex> tensor_product(std::span<const Complex> u, std::span<const Complex> v);

// Tr_B of an operator on H_A (x) H_B.
ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

}  // namespace qdm
