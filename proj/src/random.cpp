#include "qdm/random.hpp"

#include <cmath>

namespace qdm {

ComplexMatrix gaussian_matrix(std::size_t dim, Rng& rng) {
    ComplexMatrix g(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) g(r, c) = rng.complex_normal();
    return g;
}

ComplexMatrix haar_unitary(std::size_t dim, Rng& rng) {
    ComplexMatrix q = gaussian_matrix(dim, rng);
    // Modified Gram-Schmidt over columns; R's diagonal is positive real by
    // construction, which is the phase convention that makes Q Haar.
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            Complex proj = 0.0;
            for (std::size_t r = 0; r < dim; ++r) proj += std::conj(q(r, k)) * q(r, j);
            for (std::size_t r = 0; r < dim; ++r) q(r, j) -= proj * q(r, k);
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < dim; ++r) norm += std::norm(q(r, j));
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < dim; ++r) q(r, j) /= norm;
    }
    return q;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
    const ComplexMatrix g = gaussian_matrix(dim, rng);
    return (g + g.adjoint()) * Complex{0.5};
}

std::vector<double> dirichlet(std::size_t m, Rng& rng) {
    std::vector<double> p(m);
    double total = 0.0;
    for (auto& x : p) {
        // Gamma(1) is Exp(1); 1 - u avoids log(0).
        x = -std::log(1.0 - rng.uniform());
        total += x;
    }
    for (auto& x : p) x /= total;
    return p;
}

}  // namespace qdm
