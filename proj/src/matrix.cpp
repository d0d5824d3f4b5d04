#include "tcm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tcm {

SquareMatrix SquareMatrix::identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

SquareMatrix SquareMatrix::adjoint() const {
    SquareMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

SquareMatrix SquareMatrix::scaled(double factor) const {
    SquareMatrix out = *this;
    for (auto& z : out.data_) z *= factor;
    return out;
}

double SquareMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double SquareMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix product: dimension mismatch");
    const std::size_t n = a.dim();
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix difference: dimension mismatch");
    SquareMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

std::vector<Complex> multiply(const SquareMatrix& m, std::span<const Complex> v) {
    if (m.dim() != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    std::vector<Complex> out(v.size());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < m.dim(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

double hermiticity_defect(const SquareMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

}  // namespace tcm
