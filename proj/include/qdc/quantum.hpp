#pragma once

#include <array>

#include "qdc/linalg.hpp"
#include "qdc/prob.hpp"

namespace qdc {

// Hermitian, PSD, unit-trace operator. Construct through validate_density
// or bloch_to_density.
class DensityMatrix {
  public:
    const CMatrix &mat() const { return mat_; }
    int dim() const { return mat_.dim(); }

  private:
    friend DensityMatrix validate_density(const CMatrix &m);
    explicit DensityMatrix(CMatrix m) : mat_(std::move(m)) {}
    CMatrix mat_;
};

// Unitary matrix whose columns are the basis kets |b_j>.
class OrthonormalBasis {
  public:
    static OrthonormalBasis from_columns(const CMatrix &vectors);
    static OrthonormalBasis computational(int dim);
    // Columns (1,1)/sqrt2 and (1,-1)/sqrt2.
    static OrthonormalBasis hadamard();
    // Eigenbasis of a density matrix, in hermitian_eig's deterministic order.
    static OrthonormalBasis eigenbasis(const DensityMatrix &rho);

    const CMatrix &vectors() const { return v_; }
    int dim() const { return v_.dim(); }

  private:
    explicit OrthonormalBasis(CMatrix v) : v_(std::move(v)) {}
    CMatrix v_;
};

// P_ij = |<lambda_i|b_j>|^2; rows and columns each sum to 1 within 1e-9.
struct OverlapMatrix {
    int dim;
    std::vector<double> p; // row-major
    double at(int i, int j) const { return p[static_cast<size_t>(i) * dim + j]; }
};

DensityMatrix validate_density(const CMatrix &m);

// rho = (I + r_x X + r_y Y + r_z Z)/2 for a Bloch vector inside the unit ball.
DensityMatrix bloch_to_density(const std::array<double, 3> &r);

// Eigenvalues of rho as a distribution (p_rho).
ProbDist eigenvalue_dist(const DensityMatrix &rho);

// S(rho) = -sum lambda log2 lambda, in bits.
double von_neumann_entropy(const DensityMatrix &rho);

// S(rho||sigma) in bits, evaluated in sigma's eigenbasis as
// -S(rho) - sum_j eta_j log2 chi_j; +infinity on support violation.
double quantum_relative_entropy(const DensityMatrix &rho, const DensityMatrix &sigma);

OverlapMatrix overlap_matrix(const DensityMatrix &rho, const OrthonormalBasis &basis);

struct EffectiveDensity {
    DensityMatrix rho_tilde; // diagonal in the given basis
    ProbDist eta;            // its eigenvalues, eta_j = <b_j|rho|b_j>
};

EffectiveDensity effective_density(const DensityMatrix &rho, const OrthonormalBasis &basis);

struct EntropyIdentitySides {
    double lhs; // S(rho||sigma) + S(rho)
    double rhs; // D(eta||chi) + H(eta)
    ProbDist eta;
    ProbDist chi;
};

// Both sides of the quantum/classical entropy identity, with the
// computational basis fixed to sigma's eigenbasis.
EntropyIdentitySides entropy_identity_sides(const DensityMatrix &rho, const DensityMatrix &sigma);

} // namespace qdc
