#include "qdc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qdc {

namespace {

void check_finite(const std::vector<cplx> &a) {
    for (const auto &z : a) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw ValidationError("matrix entry is not finite");
    }
}

} // namespace

CMatrix::CMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw ValidationError("matrix dimension must be >= 1");
    a_.assign(static_cast<size_t>(dim) * dim, cplx(0.0, 0.0));
}

CMatrix::CMatrix(int dim, std::vector<cplx> entries) : dim_(dim), a_(std::move(entries)) {
    if (dim < 1) throw ValidationError("matrix dimension must be >= 1");
    if (a_.size() != static_cast<size_t>(dim) * dim)
        throw DimensionMismatch("entry count does not match dimension");
    check_finite(a_);
}

CMatrix CMatrix::identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = cplx(1.0, 0.0);
    return m;
}

CMatrix matmul(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("matmul: dimensions differ");
    const int d = a.dim();
    CMatrix c(d);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            const cplx aik = a.at(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < d; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    }
    return c;
}

CMatrix adjoint(const CMatrix &a) {
    const int d = a.dim();
    CMatrix c(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) c.at(i, j) = std::conj(a.at(j, i));
    return c;
}

cplx trace(const CMatrix &a) {
    cplx t(0.0, 0.0);
    for (int i = 0; i < a.dim(); ++i) t += a.at(i, i);
    return t;
}

CMatrix add(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("add: dimensions differ");
    CMatrix c = a;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) c.at(i, j) += b.at(i, j);
    return c;
}

CMatrix sub(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("sub: dimensions differ");
    CMatrix c = a;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) c.at(i, j) -= b.at(i, j);
    return c;
}

CMatrix scale(cplx s, const CMatrix &a) {
    CMatrix c = a;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) c.at(i, j) *= s;
    return c;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff: dimensions differ");
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
    return m;
}

double hermiticity_defect(const CMatrix &a) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a.at(i, j) - std::conj(a.at(j, i))));
    return m;
}

namespace {

double offdiag_frobenius(const CMatrix &a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

constexpr int kMaxSweeps = 100;
constexpr double kOffdiagTarget = 1e-12;
constexpr double kHermitianTol = 1e-9;

} // namespace

SpectralDecomposition hermitian_eig(const CMatrix &m) {
    if (hermiticity_defect(m) > kHermitianTol)
        throw NotHermitian("hermitian_eig: input is not Hermitian to 1e-9");

    const int d = m.dim();
    CMatrix a = m;
    // Force exact Hermitian symmetry so rotations preserve it bit-for-bit.
    for (int i = 0; i < d; ++i) {
        a.at(i, i) = cplx(a.at(i, i).real(), 0.0);
        for (int j = i + 1; j < d; ++j) {
            cplx avg = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            a.at(i, j) = avg;
            a.at(j, i) = std::conj(avg);
        }
    }
    CMatrix v = CMatrix::identity(d);

    bool converged = (offdiag_frobenius(a) < kOffdiagTarget);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const cplx apq = a.at(p, q);
                const double r = std::abs(apq);
                if (r < 1e-300) continue;
                // Phase u maps the pivot onto the real axis, then a real
                // Jacobi rotation annihilates it.
                const cplx u = apq / r;
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Columns of the plane rotation G (acting on coordinates p,q):
                //   G[:,p] = ( c, -s*conj(u) ),  G[:,q] = ( s*u, c )    restricted to rows p,q.
                const cplx gpp(c, 0.0), gqq(c, 0.0);
                const cplx gpq = s * u;          // row p, col q
                const cplx gqp = -s * std::conj(u); // row q, col p

                // A <- G^dagger A G ; update rows p,q then columns p,q.
                for (int j = 0; j < d; ++j) {
                    const cplx apj = a.at(p, j);
                    const cplx aqj = a.at(q, j);
                    a.at(p, j) = std::conj(gpp) * apj + std::conj(gqp) * aqj;
                    a.at(q, j) = std::conj(gpq) * apj + std::conj(gqq) * aqj;
                }
                for (int i = 0; i < d; ++i) {
                    const cplx aip = a.at(i, p);
                    const cplx aiq = a.at(i, q);
                    a.at(i, p) = aip * gpp + aiq * gqp;
                    a.at(i, q) = aip * gpq + aiq * gqq;
                    const cplx vip = v.at(i, p);
                    const cplx viq = v.at(i, q);
                    v.at(i, p) = vip * gpp + viq * gqp;
                    v.at(i, q) = vip * gpq + viq * gqq;
                }
                a.at(p, q) = cplx(0.0, 0.0);
                a.at(q, p) = cplx(0.0, 0.0);
                a.at(p, p) = cplx(a.at(p, p).real(), 0.0);
                a.at(q, q) = cplx(a.at(q, q).real(), 0.0);
            }
        }
        converged = (offdiag_frobenius(a) < kOffdiagTarget);
    }
    if (!converged) throw NoConvergence("hermitian_eig: sweep budget exhausted");

    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a.at(i, i).real() > a.at(j, j).real(); });

    SpectralDecomposition out{std::vector<double>(d), CMatrix(d)};
    for (int k = 0; k < d; ++k) {
        const int c0 = order[k];
        out.eigenvalues[k] = a.at(c0, c0).real();
        // Phase convention: first component of magnitude > 1e-8 real positive.
        cplx phase(1.0, 0.0);
        for (int i = 0; i < d; ++i) {
            const cplx vi = v.at(i, c0);
            if (std::abs(vi) > 1e-8) {
                phase = std::conj(vi) / std::abs(vi);
                break;
            }
        }
        for (int i = 0; i < d; ++i) out.eigenvectors.at(i, k) = v.at(i, c0) * phase;
    }
    return out;
}

} // namespace qdc
