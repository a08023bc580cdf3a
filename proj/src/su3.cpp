#include "qutritlab/su3.hpp"

#include <cmath>

namespace qutritlab::su3 {

namespace {
constexpr Complex I{0.0, 1.0};
}

GellMannBasis build_basis() {
    GellMannBasis b;
    const double s3 = std::sqrt(3.0);
    b.lambda[0] = std::sqrt(2.0 / 3.0) * ComplexMatrix::identity(3);
    b.lambda[1] = ComplexMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
    b.lambda[2] = ComplexMatrix::from_rows({{0, -I, 0}, {I, 0, 0}, {0, 0, 0}});
    b.lambda[3] = ComplexMatrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}});
    b.lambda[4] = ComplexMatrix::from_rows({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});
    b.lambda[5] = ComplexMatrix::from_rows({{0, 0, -I}, {0, 0, 0}, {I, 0, 0}});
    b.lambda[6] = ComplexMatrix::from_rows({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    b.lambda[7] = ComplexMatrix::from_rows({{0, 0, 0}, {0, 0, -I}, {0, I, 0}});
    b.lambda[8] = (1.0 / s3) * ComplexMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, -2}});
    return b;
}

StructureConstants compute_structure_constants(const GellMannBasis& basis) {
    StructureConstants sc;
    for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k) {
            const ComplexMatrix jk = basis.lambda[j + 1] * basis.lambda[k + 1];
            const ComplexMatrix kj = basis.lambda[k + 1] * basis.lambda[j + 1];
            for (int l = 0; l < 8; ++l) {
                const Complex comm = trace((jk - kj) * basis.lambda[l + 1]);
                const Complex anti = trace((jk + kj) * basis.lambda[l + 1]);
                sc.f[j][k][l] = std::imag(comm) / 4.0; // tr([.,.]l)/4i
                sc.d[j][k][l] = std::real(anti) / 4.0;
            }
        }
    return sc;
}

const GellMannBasis& basis() {
    static const GellMannBasis b = build_basis();
    return b;
}

const StructureConstants& structure_constants() {
    static const StructureConstants sc = compute_structure_constants(basis());
    return sc;
}

double dot(const Vec8& a, const Vec8& b) {
    double s = 0.0;
    for (int j = 0; j < 8; ++j) s += a[j] * b[j];
    return s;
}

Vec8 star(const StructureConstants& sc, const Vec8& a, const Vec8& b) {
    const double s3 = std::sqrt(3.0);
    Vec8 out{};
    for (int j = 0; j < 8; ++j) {
        double s = 0.0;
        for (int k = 0; k < 8; ++k) {
            if (a[k] == 0.0) continue;
            for (int l = 0; l < 8; ++l) s += sc.d[j][k][l] * a[k] * b[l];
        }
        out[j] = s3 * s;
    }
    return out;
}

Vec8 star(const Vec8& a, const Vec8& b) { return star(structure_constants(), a, b); }

ComplexMatrix bloch_dot_lambda(const Vec8& c) {
    const GellMannBasis& b = basis();
    ComplexMatrix out(3);
    for (int j = 0; j < 8; ++j) {
        if (c[j] == 0.0) continue;
        out += c[j] * b.lambda[j + 1];
    }
    return out;
}

} // namespace qutritlab::su3
