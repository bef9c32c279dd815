#include "qdm/measure.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qdm/linalg.hpp"
#include "qdm/random.hpp"

namespace qdm {
namespace {

// Hermitian part with an exactly real diagonal.
ComplexMatrix hermitize(const ComplexMatrix& m) {
    ComplexMatrix h = (m + m.adjoint()) * Complex{0.5};
    for (std::size_t i = 0; i < h.dim(); ++i) h(i, i) = h(i, i).real();
    return h;
}

// Re Tr(A B) for Hermitian A, B.
double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t n = a.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += (a(i, j) * b(j, i)).real();
    return s;
}

}  // namespace

Povm::Povm(std::vector<ComplexMatrix> elements, const Tolerances& tol) : elements_(std::move(elements)) {
    if (elements_.empty()) throw InvalidValue("non-empty", "POVM has no elements");
    const std::size_t n = elements_.front().dim();
    ComplexMatrix total(n);
    for (std::size_t x = 0; x < elements_.size(); ++x) {
        const auto& e = elements_[x];
        if (e.dim() != n) throw DimensionMismatch("POVM elements differ in dimension");
        if (!e.is_hermitian(tol.herm)) {
            throw InvalidValue("hermitian", "POVM element " + std::to_string(x) + " is not Hermitian");
        }
        if (!eigenvalues_above(e, tol.psd)) {
            throw InvalidValue("positive-semidefinite",
                               "POVM element " + std::to_string(x) + " is not PSD");
        }
        total += e;
    }
    if (max_abs_diff(total, ComplexMatrix::identity(n)) > tol.eig) {
        throw InvalidValue("completeness", "POVM elements do not sum to the identity");
    }
}

ProbDist apply(const Povm& povm, const DensityMatrix& rho, const Tolerances& tol) {
    if (povm.dim() != rho.dim()) {
        throw DimensionMismatch("POVM dim " + std::to_string(povm.dim()) + " vs state dim " +
                                std::to_string(rho.dim()));
    }
    std::vector<double> p(povm.outcomes());
    double total = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        double v = trace_product(rho.matrix(), povm[x]);
        if (v < 0.0) {
            if (v < -tol.psd) {
                throw InvalidValue("nonnegative", "Born-rule probability " + std::to_string(v));
            }
            v = 0.0;
        }
        p[x] = v;
        total += v;
    }
    for (auto& v : p) v /= total;
    return ProbDist(std::move(p), tol);
}

HypothesisPair apply(const Povm& povm, const DensityMatrix& rho0, const DensityMatrix& rho1,
                     const Tolerances& tol) {
    return HypothesisPair(apply(povm, rho0, tol), apply(povm, rho1, tol));
}

Povm make_polarization_pvm(double alpha) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    return Povm({ComplexMatrix{{c * c, c * s}, {c * s, s * s}},
                 ComplexMatrix{{s * s, -c * s}, {-c * s, c * c}}});
}

Povm make_trine() {
    const double r = std::numbers::sqrt3 / 6.0;
    return Povm({ComplexMatrix{{2.0 / 3.0, 0.0}, {0.0, 0.0}},
                 ComplexMatrix{{1.0 / 6.0, r}, {r, 0.5}},
                 ComplexMatrix{{1.0 / 6.0, -r}, {-r, 0.5}}});
}

Povm basis_pvm(const ComplexMatrix& unitary, const Tolerances& tol) {
    const std::size_t n = unitary.dim();
    std::vector<ComplexMatrix> elems;
    elems.reserve(n);
    std::vector<Complex> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < n; ++r) col[r] = unitary(r, j);
        elems.push_back(ComplexMatrix::outer(col));
    }
    return Povm(std::move(elems), tol);
}

bool is_pvm(const Povm& povm, const Tolerances& tol) {
    const auto& e = povm.elements();
    for (std::size_t x = 0; x < e.size(); ++x) {
        for (std::size_t y = x; y < e.size(); ++y) {
            const ComplexMatrix prod = e[x] * e[y];
            const ComplexMatrix expect = (x == y) ? e[x] : ComplexMatrix::zeros(povm.dim());
            if (max_abs_diff(prod, expect) > tol.eig) return false;
        }
    }
    return true;
}

Povm helstrom_pvm(const DensityMatrix& rho0, const DensityMatrix& rho1, const Tolerances& tol,
                  ZeroEigenspace zeros) {
    if (rho0.dim() != rho1.dim()) throw DimensionMismatch("state pair differs in dimension");
    const std::size_t n = rho0.dim();
    const auto eig = hermitian_eig(rho0.matrix() - rho1.matrix(), tol);

    bool vanishing = true;
    for (double l : eig.values) vanishing = vanishing && std::abs(l) <= tol.psd;
    if (vanishing) {
        ComplexMatrix first(n);
        first(0, 0) = 1.0;
        return Povm({first, ComplexMatrix::identity(n) - first}, tol);
    }

    ComplexMatrix first(n);
    ComplexMatrix second(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double l = eig.values[j];
        const bool to_first =
            l > tol.psd || (std::abs(l) <= tol.psd && zeros == ZeroEigenspace::kFirst);
        (to_first ? first : second) += ComplexMatrix::outer(eig.vector(j));
    }
    return Povm({hermitize(first), hermitize(second)}, tol);
}

Povm random_povm(std::size_t dim, std::size_t m, std::uint64_t seed) {
    if (dim == 0 || m == 0) throw DomainError("random_povm needs dim >= 1 and m >= 1");
    if (m == 1) return Povm({ComplexMatrix::identity(dim)});
    Rng rng(seed);
    std::vector<ComplexMatrix> a;
    a.reserve(m);
    ComplexMatrix total(dim);
    for (std::size_t x = 0; x < m; ++x) {
        const ComplexMatrix g = gaussian_matrix(dim, rng);
        a.push_back(hermitize(g * g.adjoint()));
        total += a.back();
    }
    const ComplexMatrix s = pd_inverse_sqrt(hermitize(total));
    for (auto& e : a) e = hermitize(s * e * s);
    return Povm(std::move(a));
}

}  // namespace qdm
