#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qdm/matrix.hpp"

namespace qdm {

// Seeded generator. Every randomized routine takes one of these (or a seed)
// explicitly; nothing draws from hidden global state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }
    // Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    Complex complex_normal() { return {normal(), normal()}; }
    std::uint64_t next_seed() { return engine_(); }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// Square matrix of i.i.d. standard complex Gaussians.
ComplexMatrix gaussian_matrix(std::size_t dim, Rng& rng);

// Haar-distributed unitary (QR of a Gaussian matrix with phase-fixed R).
ComplexMatrix haar_unitary(std::size_t dim, Rng& rng);

// Random Hermitian matrix (G + G^dagger)/2.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

// Symmetric Dirichlet(1, ..., 1) sample over m outcomes.
std::vector<double> dirichlet(std::size_t m, Rng& rng);

}  // namespace qdm
