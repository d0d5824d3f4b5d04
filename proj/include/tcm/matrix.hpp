#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tcm {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static SquareMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    std::span<const Complex> data() const { return data_; }

    SquareMatrix adjoint() const;
    SquareMatrix scaled(double factor) const;

    double max_abs() const;
    double frobenius_norm() const;

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

// Hamiltonians and density matrices share the dense representation; Hermiticity is
// a property checked where it matters, not a separate type.
using HermitianMatrix = SquareMatrix;

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);

std::vector<Complex> multiply(const SquareMatrix& m, std::span<const Complex> v);

// max |m(i,j) - conj(m(j,i))|
double hermiticity_defect(const SquareMatrix& m);

}  // namespace tcm
