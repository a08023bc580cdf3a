#include "qutritlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qutritlab::linalg {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t n = rows.size();
    ComplexMatrix m(n);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != n) fail("shape", "from_rows: ragged row " + std::to_string(r));
        std::size_t c = 0;
        for (const auto& v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (dim_ != o.dim_) fail("shape", "matrix sum: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (dim_ != o.dim_) fail("shape", "matrix difference: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& v : a_) v *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) fail("shape", "matmul: dimension mismatch");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = std::conj(a(j, i));
    return out;
}

Complex trace(const ComplexMatrix& a) {
    Complex t{};
    for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& v : a.entries()) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& v : a.entries()) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) fail("shape", "max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
    const std::size_t n = a.dim();
    double skew = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            skew = std::max(skew, std::abs(a(i, j) - std::conj(a(j, i))));
    return skew <= rel_tol * max_abs(a);
}

std::size_t SubsystemShape::total() const {
    std::size_t t = 1;
    for (std::size_t d : dims) {
        if (d == 0) fail("shape", "subsystem dimension must be positive");
        t *= d;
    }
    return t;
}

namespace {

void check_shape(const ComplexMatrix& rho, const SubsystemShape& shape, std::size_t which) {
    if (shape.total() != rho.dim())
        fail("shape", "subsystem shape does not factor the matrix dimension");
    if (which >= shape.dims.size()) fail("shape", "subsystem index out of range");
}

// Row/column index strides of factor `which`: index = (outer*d + local)*inner + suffix.
std::size_t inner_stride(const SubsystemShape& shape, std::size_t which) {
    std::size_t inner = 1;
    for (std::size_t m = which + 1; m < shape.dims.size(); ++m) inner *= shape.dims[m];
    return inner;
}

} // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SubsystemShape& shape,
                                std::size_t which) {
    check_shape(rho, shape, which);
    const std::size_t n = rho.dim();
    const std::size_t d = shape.dims[which];
    const std::size_t inner = inner_stride(shape, which);
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t a = (r / inner) % d;
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t b = (c / inner) % d;
            const std::size_t rr = r - a * inner + b * inner;
            const std::size_t cc = c - b * inner + a * inner;
            out(rr, cc) = rho(r, c);
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemShape& shape,
                            std::size_t keep) {
    check_shape(rho, shape, keep);
    const std::size_t d = shape.dims[keep];
    const std::size_t inner = inner_stride(shape, keep);
    const std::size_t outer = rho.dim() / (d * inner);
    ComplexMatrix out(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Complex s{};
            for (std::size_t o = 0; o < outer; ++o)
                for (std::size_t t = 0; t < inner; ++t)
                    s += rho((o * d + a) * inner + t, (o * d + b) * inner + t);
            out(a, b) = s;
        }
    return out;
}

namespace {

double offdiag_norm(const std::vector<Complex>& m, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += std::norm(m[i * n + j]);
    return std::sqrt(2.0 * s);
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    if (!is_hermitian(a)) fail("not_hermitian", "eigensolver requires a Hermitian matrix");
    const std::size_t n = a.dim();

    // Symmetrized working copy: rotations then keep it exactly Hermitian.
    std::vector<Complex> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = std::real(a(i, i));
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            m[i * n + j] = v;
            m[j * n + i] = std::conj(v);
        }
    }

    const double norm = frobenius_norm(a);
    std::vector<double> eig(n);
    if (norm == 0.0) return eig;

    const double stop = 1e-13 * norm;
    const double skip = stop / (2.0 * static_cast<double>(n));
    bool converged = false;

    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        if (offdiag_norm(m, n) <= stop) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = m[p * n + q];
                const double r = std::abs(apq);
                if (r <= skip) continue;

                const Complex w = apq / r; // unit phase of the pivot
                const double alpha = std::real(m[p * n + p]);
                const double beta = std::real(m[q * n + q]);
                const double tau = (beta - alpha) / (2.0 * r);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex swc = s * std::conj(w);

                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const Complex aip = m[i * n + p];
                    const Complex aiq = m[i * n + q];
                    const Complex cip = c * aip - swc * aiq;
                    const Complex ciq = s * aip + c * std::conj(w) * aiq;
                    m[i * n + p] = cip;
                    m[i * n + q] = ciq;
                    m[p * n + i] = std::conj(cip);
                    m[q * n + i] = std::conj(ciq);
                }
                m[p * n + p] = alpha - t * r;
                m[q * n + q] = beta + t * r;
                m[p * n + q] = Complex{};
                m[q * n + p] = Complex{};
            }
    }

    if (!converged && offdiag_norm(m, n) > stop)
        fail("eig_no_converge", "Jacobi iteration did not converge in 100 sweeps");

    for (std::size_t i = 0; i < n; ++i) eig[i] = std::real(m[i * n + i]);
    std::sort(eig.begin(), eig.end());
    return eig;
}

double min_eigenvalue(const ComplexMatrix& a) { return hermitian_eigenvalues(a).front(); }

double default_psd_tol(const ComplexMatrix& a) {
    return 1e-10 * std::max(1.0, frobenius_norm(a));
}

bool is_psd(const ComplexMatrix& a, double tol) { return min_eigenvalue(a) >= -tol; }

bool is_psd(const ComplexMatrix& a) { return is_psd(a, default_psd_tol(a)); }

} // namespace qutritlab::linalg
