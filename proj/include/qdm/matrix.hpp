#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qdm/error.hpp"

namespace qdm {

using Complex = std::complex<double>;

// Numerical tolerances shared by all modules. Defaults are the documented
// library values; callers may override any of them.
struct Tolerances {
    double herm = 1e-10;  // max |M - M^dagger| entry for Hermitian inputs
    double psd = 1e-8;    // eigenvalues in [-psd, 0) count as zero
    double eig = 1e-9;    // reconstruction / trace / completeness checks
};

// Largest Hilbert-space dimension any operation will build.
inline constexpr std::size_t kDefaultDimCap = std::size_t{1} << 12;

// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
    // Row-major nested initializer, e.g. {{1, 0}, {0, 1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zeros(std::size_t dim) { return ComplexMatrix(dim); }
    static ComplexMatrix diagonal(std::span<const double> values);
    // |v><v|
    static ComplexMatrix outer(std::span<const Complex> v);

    std::size_t dim() const noexcept { return dim_; }
    std::span<const Complex> entries() const noexcept { return data_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    // max_ij |M_ij|
    double max_abs() const;
    double frobenius_norm() const;
    bool is_hermitian(double tol) const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

    std::vector<Complex> apply(std::span<const Complex> v) const;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

// max_ij |A_ij - B_ij|; throws DimensionMismatch on differing dims.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// <u|v>
Complex inner(std::span<const Complex> u, std::span<const Complex> v);

}  // namespace qdm
