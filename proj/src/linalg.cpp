#include "qdm/linalg.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>

namespace qdm {
namespace {

struct Rotation {
    double c;
    double s;
    Complex phase_conj;  // e^{-i phi}
    double t;
};

// Rotation that annihilates the (p,q) entry g*e^{i phi} of the Hermitian 2x2
// block [[app, g e^{i phi}], [g e^{-i phi}, aqq]].
Rotation jacobi_rotation(double app, double aqq, Complex apq) {
    const double g = std::abs(apq);
    const Complex phase = apq / g;
    const double theta = (aqq - app) / (2.0 * g);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, t * c, std::conj(phase), t};
}

}  // namespace

std::vector<Complex> EigenDecomposition::vector(std::size_t j) const {
    std::vector<Complex> v(vectors.dim());
    for (std::size_t r = 0; r < v.size(); ++r) v[r] = vectors(r, j);
    return v;
}

ComplexMatrix EigenDecomposition::reconstruct() const {
    return spectral_apply(*this, [](double x) { return x; });
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m, const Tolerances& tol, int max_sweeps) {
    if (!m.is_hermitian(tol.herm)) {
        throw NotHermitian("matrix is not Hermitian within " + std::to_string(tol.herm));
    }
    const std::size_t n = m.dim();
    ComplexMatrix a = (m + m.adjoint()) * Complex{0.5};
    for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = a.frobenius_norm();
    bool converged = (scale == 0.0);
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= DBL_EPSILON * DBL_EPSILON * scale) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double g = std::abs(apq);
                if (g == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Entry below the resolution of both diagonal entries: drop it.
                if (sweep > 3 && std::abs(app) + 100.0 * g == std::abs(app) &&
                    std::abs(aqq) + 100.0 * g == std::abs(aqq)) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const Rotation r = jacobi_rotation(app, aqq, apq);
                const Complex sp = r.s * r.phase_conj;
                const Complex cp = r.c * r.phase_conj;
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = r.c * akp - sp * akq;
                    a(k, q) = r.s * akp + cp * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = r.c * apk - std::conj(sp) * aqk;
                    a(q, k) = r.s * apk + std::conj(cp) * aqk;
                }
                a(p, p) = app - r.t * g;
                a(q, q) = aqq + r.t * g;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = r.c * vkp - sp * vkq;
                    v(k, q) = r.s * vkp + cp * vkq;
                }
            }
        }
    }
    if (!converged) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) > DBL_EPSILON * scale) {
            throw NoConvergence("Jacobi eigensolver exhausted " + std::to_string(max_sweeps) +
                                " sweeps");
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });
    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, j) = v(r, order[j]);
    }
    return out;
}

ComplexMatrix spectral_apply(const EigenDecomposition& eig, const std::function<double(double)>& f) {
    const std::size_t n = eig.vectors.dim();
    ComplexMatrix out(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double fj = f(eig.values[j]);
        if (fj == 0.0) continue;
        for (std::size_t r = 0; r < n; ++r) {
            const Complex vr = eig.vectors(r, j) * fj;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(eig.vectors(c, j));
        }
    }
    return out;
}

double spectral_noise_floor(const EigenDecomposition& eig) {
    double big = 0.0;
    for (double x : eig.values) big = std::max(big, std::abs(x));
    return 4.0 * static_cast<double>(eig.values.size()) * DBL_EPSILON * big;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerances& tol) {
    const EigenDecomposition eig = hermitian_eig(m, tol);
    if (!eig.values.empty() && eig.values.front() < -tol.psd) {
        throw NotPsd("eigenvalue " + std::to_string(eig.values.front()) + " below -" +
                     std::to_string(tol.psd));
    }
    const double floor = spectral_noise_floor(eig);
    return spectral_apply(eig, [floor](double x) { return x <= floor ? 0.0 : std::sqrt(x); });
}

bool eigenvalues_above(const ComplexMatrix& m, double shift) {
    const std::size_t n = m.dim();
    ComplexMatrix l(n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = m(j, j).real() + shift;
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
        if (!(d > 0.0)) return false;
        const double root = std::sqrt(d);
        l(j, j) = root;
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex v = m(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * std::conj(l(j, k));
            l(i, j) = v / root;
        }
    }
    return true;
}

ComplexMatrix pd_inverse_sqrt(const ComplexMatrix& m, const Tolerances& tol) {
    const EigenDecomposition eig = hermitian_eig(m, tol);
    const double floor = spectral_noise_floor(eig);
    if (eig.values.empty() || eig.values.front() <= floor) {
        throw NotPsd("matrix is not positive definite");
    }
    return spectral_apply(eig, [](double x) { return 1.0 / std::sqrt(x); });
}

double trace_norm(const ComplexMatrix& m, const Tolerances& tol) {
    const EigenDecomposition eig = hermitian_eig(m, tol);
    double s = 0.0;
    for (double x : eig.values) s += std::abs(x);
    return s;
}

std::vector<double> singular_values(const ComplexMatrix& m, int max_sweeps) {
    const std::size_t n = m.dim();
    // Columns of the working copy, stored contiguously.
    std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) cols[c][r] = m(r, c);

    auto norm2 = [](const std::vector<Complex>& x) {
        double s = 0.0;
        for (const auto& z : x) s += std::norm(z);
        return s;
    };

    double fro2 = 0.0;
    for (const auto& c : cols) fro2 += norm2(c);
    // Columns below this squared norm are round-off and carry no singular value.
    const double negligible = DBL_EPSILON * DBL_EPSILON * fro2;

    bool rotated = true;
    for (int sweep = 0; sweep < max_sweeps && rotated; ++sweep) {
        rotated = false;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = norm2(cols[p]);
                const double beta = norm2(cols[q]);
                const Complex gamma = inner(cols[p], cols[q]);
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= DBL_EPSILON * std::sqrt(alpha * beta)) continue;
                if (alpha <= negligible || beta <= negligible) continue;
                rotated = true;
                const Rotation r = jacobi_rotation(alpha, beta, gamma);
                const Complex sp = r.s * r.phase_conj;
                const Complex cp = r.c * r.phase_conj;
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex xp = cols[p][k];
                    const Complex xq = cols[q][k];
                    cols[p][k] = r.c * xp - sp * xq;
                    cols[q][k] = r.s * xp + cp * xq;
                }
            }
        }
        if (sweep + 1 == max_sweeps && rotated) {
            throw NoConvergence("one-sided Jacobi SVD exhausted sweeps");
        }
    }
    std::vector<double> sv(n);
    for (std::size_t c = 0; c < n; ++c) sv[c] = std::sqrt(norm2(cols[c]));
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

double schatten1_norm(const ComplexMatrix& m) {
    const auto sv = singular_values(m);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t cap) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    if (na != 0 && nb > cap / na) {
        throw DimensionOverflow("tensor product dimension " + std::to_string(na) + "*" +
                                std::to_string(nb) + " exceeds cap " + std::to_string(cap));
    }
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

std::vector<Complex> tensor_product(std::span<const Complex> u, std::span<const Complex> v) {
    std::vector<Complex> out;
    out.reserve(u.size() * v.size());
    for (const auto& x : u)
        for (const auto& y : v) out.push_back(x * y);
    return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
    if (m.dim() != dim_a * dim_b) {
        throw DimensionMismatch("partial trace: dim " + std::to_string(m.dim()) + " != " +
                                std::to_string(dim_a) + "*" + std::to_string(dim_b));
    }
    ComplexMatrix out(dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t j = 0; j < dim_a; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < dim_b; ++k) s += m(i * dim_b + k, j * dim_b + k);
            out(i, j) = s;
        }
    return out;
}

}  // namespace qdm
