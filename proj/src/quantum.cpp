#include "qdc/quantum.hpp"

#include <cmath>
#include <limits>

namespace qdc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double entropy_of_eigenvalues(const std::vector<double> &lam) {
    double s = 0.0;
    for (double x : lam) {
        double v = (x < 0.0 && x >= -1e-10) ? 0.0 : x;
        if (v > 0.0) s -= v * std::log2(v);
    }
    return s;
}

// <b_j|rho|b_j> for every column of the basis; real up to Hermitian noise.
std::vector<double> basis_diagonal(const CMatrix &rho, const CMatrix &basis) {
    const int d = rho.dim();
    std::vector<double> out(d, 0.0);
    for (int j = 0; j < d; ++j) {
        cplx acc(0.0, 0.0);
        for (int r = 0; r < d; ++r) {
            cplx row(0.0, 0.0);
            for (int c = 0; c < d; ++c) row += rho.at(r, c) * basis.at(c, j);
            acc += std::conj(basis.at(r, j)) * row;
        }
        out[j] = acc.real();
    }
    return out;
}

} // namespace

DensityMatrix validate_density(const CMatrix &m) {
    if (hermiticity_defect(m) > 1e-9) throw NotHermitian("density matrix is not Hermitian");
    if (std::abs(trace(m) - cplx(1.0, 0.0)) > 1e-9) throw BadTrace("density matrix trace is not 1");
    auto eig = hermitian_eig(m);
    for (double lam : eig.eigenvalues) {
        if (lam < -1e-10) throw NotPSD("density matrix has a negative eigenvalue");
    }
    return DensityMatrix(m);
}

DensityMatrix bloch_to_density(const std::array<double, 3> &r) {
    const double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (!(norm <= 1.0 + 1e-12)) throw OutsideBlochBall("Bloch vector has length > 1");
    CMatrix m(2);
    m.at(0, 0) = cplx(0.5 * (1.0 + r[2]), 0.0);
    m.at(1, 1) = cplx(0.5 * (1.0 - r[2]), 0.0);
    m.at(0, 1) = cplx(0.5 * r[0], -0.5 * r[1]);
    m.at(1, 0) = cplx(0.5 * r[0], 0.5 * r[1]);
    return validate_density(m);
}

OrthonormalBasis OrthonormalBasis::from_columns(const CMatrix &vectors) {
    if (max_abs_diff(matmul(adjoint(vectors), vectors), CMatrix::identity(vectors.dim())) > 1e-10)
        throw ValidationError("basis columns are not orthonormal");
    return OrthonormalBasis(vectors);
}

OrthonormalBasis OrthonormalBasis::computational(int dim) {
    return OrthonormalBasis(CMatrix::identity(dim));
}

OrthonormalBasis OrthonormalBasis::hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix m(2);
    m.at(0, 0) = s;
    m.at(1, 0) = s;
    m.at(0, 1) = s;
    m.at(1, 1) = -s;
    return OrthonormalBasis(m);
}

OrthonormalBasis OrthonormalBasis::eigenbasis(const DensityMatrix &rho) {
    return OrthonormalBasis(hermitian_eig(rho.mat()).eigenvectors);
}

ProbDist eigenvalue_dist(const DensityMatrix &rho) {
    return ProbDist::from_eigenvalues(hermitian_eig(rho.mat()).eigenvalues);
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return entropy_of_eigenvalues(hermitian_eig(rho.mat()).eigenvalues);
}

double quantum_relative_entropy(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dim() != sigma.dim()) throw DimensionMismatch("relative entropy: dimensions differ");
    auto sig = hermitian_eig(sigma.mat());
    auto eta = basis_diagonal(rho.mat(), sig.eigenvectors);

    double cross = 0.0; // sum_j eta_j log2 chi_j
    for (int j = 0; j < rho.dim(); ++j) {
        const double chi = sig.eigenvalues[j] < 0.0 ? 0.0 : sig.eigenvalues[j];
        if (eta[j] > 1e-12 && chi < 1e-15) return kInf;
        if (eta[j] > 0.0 && chi > 0.0) cross += eta[j] * std::log2(chi);
    }
    return -von_neumann_entropy(rho) - cross;
}

OverlapMatrix overlap_matrix(const DensityMatrix &rho, const OrthonormalBasis &basis) {
    if (rho.dim() != basis.dim()) throw DimensionMismatch("overlap_matrix: dimensions differ");
    const int d = rho.dim();
    auto eig = hermitian_eig(rho.mat());
    OverlapMatrix out{d, std::vector<double>(static_cast<size_t>(d) * d, 0.0)};
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            cplx ip(0.0, 0.0); // <lambda_i|b_j>
            for (int r = 0; r < d; ++r) ip += std::conj(eig.eigenvectors.at(r, i)) * basis.vectors().at(r, j);
            out.p[static_cast<size_t>(i) * d + j] = std::norm(ip);
        }
    }
    for (int i = 0; i < d; ++i) {
        double rs = 0.0, cs = 0.0;
        for (int j = 0; j < d; ++j) {
            rs += out.at(i, j);
            cs += out.at(j, i);
        }
        if (std::abs(rs - 1.0) > 1e-9 || std::abs(cs - 1.0) > 1e-9)
            throw ValidationError("overlap matrix is not doubly stochastic");
    }
    return out;
}

EffectiveDensity effective_density(const DensityMatrix &rho, const OrthonormalBasis &basis) {
    if (rho.dim() != basis.dim()) throw DimensionMismatch("effective_density: dimensions differ");
    const int d = rho.dim();
    auto eig = hermitian_eig(rho.mat());
    auto pmat = overlap_matrix(rho, basis);

    std::vector<double> eta(d, 0.0);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) eta[j] += pmat.at(i, j) * eig.eigenvalues[i];
    }

    // Cross-check against the diagonal of rho expressed in the basis.
    auto diag = basis_diagonal(rho.mat(), basis.vectors());
    for (int j = 0; j < d; ++j) {
        if (std::abs(eta[j] - diag[j]) > 1e-10)
            throw ValidationError("effective density: P-matrix eta disagrees with basis diagonal");
    }

    CMatrix tilde(d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            cplx acc(0.0, 0.0);
            for (int j = 0; j < d; ++j)
                acc += eta[j] * basis.vectors().at(r, j) * std::conj(basis.vectors().at(c, j));
            tilde.at(r, c) = acc;
        }
    }
    return EffectiveDensity{validate_density(tilde), ProbDist::from_eigenvalues(std::move(eta))};
}

EntropyIdentitySides entropy_identity_sides(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dim() != sigma.dim()) throw DimensionMismatch("entropy_identity_sides: dimensions differ");
    auto sig = hermitian_eig(sigma.mat());
    auto basis = OrthonormalBasis::from_columns(sig.eigenvectors);
    auto eff = effective_density(rho, basis);
    ProbDist chi = ProbDist::from_eigenvalues(sig.eigenvalues);

    const double lhs = quantum_relative_entropy(rho, sigma) + von_neumann_entropy(rho);
    const double rhs = relative_entropy(eff.eta, chi) + shannon_entropy(eff.eta);
    return EntropyIdentitySides{lhs, rhs, eff.eta, chi};
}

} // namespace qdc
