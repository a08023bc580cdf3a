#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qutritlab/error.hpp"

namespace qutritlab::linalg {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major storage. Values are immutable in
// spirit: every operation returns a fresh matrix, so sharing across threads
// is safe.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {
        if (dim == 0) fail("shape", "matrix dimension must be positive");
    }

    static ComplexMatrix identity(std::size_t dim);

    // Row-major literal, e.g. from_rows({{0,1,0},{1,0,0},{0,0,0}}).
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    const std::vector<Complex>& entries() const noexcept { return a_; }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

private:
    std::size_t dim_ = 0;
    std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);

// Plain triple-loop product; throws "shape" on dimension mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return matmul(a, b);
}

// Kronecker product with row-major subsystem ordering: the left factor is
// the most significant index, (i*b.dim + k, j*b.dim + l) = a(i,j)*b(k,l).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// max|A - A^dagger| <= rel_tol * max|A|.
bool is_hermitian(const ComplexMatrix& a, double rel_tol = 1e-12);

// Ordered list of local Hilbert-space dimensions; product must equal the
// matrix dimension it is paired with. Leftmost factor is the most
// significant index, matching tensor().
struct SubsystemShape {
    std::vector<std::size_t> dims;

    std::size_t total() const;
};

// Transposes the indices of subsystem `which` only. Hermiticity is
// preserved exactly (entries are permuted, never combined).
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SubsystemShape& shape,
                                std::size_t which);

// Traces out every factor except `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemShape& shape,
                            std::size_t keep);

// All eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi
// rotations; stops once the off-diagonal Frobenius norm falls below
// 1e-13 * ||a||_F, errors with "eig_no_converge" after 100 sweeps.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

double min_eigenvalue(const ComplexMatrix& a);

// Default PSD tolerance: absorbs eigensolver noise on unit-scale states.
double default_psd_tol(const ComplexMatrix& a);

bool is_psd(const ComplexMatrix& a, double tol);
bool is_psd(const ComplexMatrix& a);

} // namespace qutritlab::linalg
