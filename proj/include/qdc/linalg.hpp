#pragma once

#include <complex>
#include <vector>

#include "qdc/errors.hpp"

namespace qdc {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major.
class CMatrix {
  public:
    explicit CMatrix(int dim);
    CMatrix(int dim, std::vector<cplx> entries);

    int dim() const { return dim_; }
    cplx &at(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const cplx &at(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const std::vector<cplx> &entries() const { return a_; }

    static CMatrix identity(int dim);

  private:
    int dim_;
    std::vector<cplx> a_;
};

CMatrix matmul(const CMatrix &a, const CMatrix &b);
CMatrix adjoint(const CMatrix &a);
cplx trace(const CMatrix &a);
CMatrix add(const CMatrix &a, const CMatrix &b);
CMatrix sub(const CMatrix &a, const CMatrix &b);
CMatrix scale(cplx s, const CMatrix &a);

// max_ij |a_ij - b_ij|
double max_abs_diff(const CMatrix &a, const CMatrix &b);
// max_ij |a_ij - a_ji^*|
double hermiticity_defect(const CMatrix &a);

struct SpectralDecomposition {
    std::vector<double> eigenvalues; // sorted descending
    CMatrix eigenvectors;            // column k pairs with eigenvalues[k]
};

// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
// Eigenvalues come back descending; each eigenvector's first component of
// magnitude > 1e-8 is rotated to the positive real axis so repeated calls
// give identical output. Throws NotHermitian when the input defect exceeds
// 1e-9 and NoConvergence if 100 sweeps do not reach an off-diagonal
// Frobenius norm below 1e-12.
SpectralDecomposition hermitian_eig(const CMatrix &m);

} // namespace qdc
