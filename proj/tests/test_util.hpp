#pragma once

#include <cmath>

#include "qdc/linalg.hpp"
#include "qdc/quantum.hpp"
#include "qdc/rng.hpp"

namespace qdc::testutil {

inline CMatrix rand_ginibre(int d, SplitMix64 &rng) {
    CMatrix g(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g.at(i, j) = cplx(rng.next_gaussian(), rng.next_gaussian());
    return g;
}

inline CMatrix rand_hermitian(int d, SplitMix64 &rng) {
    CMatrix g = rand_ginibre(d, rng);
    return scale(0.5, add(g, adjoint(g)));
}

// Full-rank density matrix via GG^dagger / tr.
inline DensityMatrix rand_density(int d, SplitMix64 &rng) {
    CMatrix g = rand_ginibre(d, rng);
    CMatrix gg = matmul(g, adjoint(g));
    return validate_density(scale(1.0 / trace(gg).real(), gg));
}

// Haar-ish unitary by Gram-Schmidt on Ginibre columns.
inline OrthonormalBasis rand_basis(int d, SplitMix64 &rng) {
    CMatrix g = rand_ginibre(d, rng);
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < j; ++k) {
            cplx ip(0.0, 0.0);
            for (int r = 0; r < d; ++r) ip += std::conj(g.at(r, k)) * g.at(r, j);
            for (int r = 0; r < d; ++r) g.at(r, j) -= ip * g.at(r, k);
        }
        double norm = 0.0;
        for (int r = 0; r < d; ++r) norm += std::norm(g.at(r, j));
        norm = std::sqrt(norm);
        for (int r = 0; r < d; ++r) g.at(r, j) /= norm;
    }
    return OrthonormalBasis::from_columns(g);
}

// Density matrix with the given eigenvalues in the given basis.
inline DensityMatrix density_in_basis(const std::vector<double> &eigs, const OrthonormalBasis &b) {
    const int d = b.dim();
    CMatrix m(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            cplx acc(0.0, 0.0);
            for (int j = 0; j < d; ++j) acc += eigs[j] * b.vectors().at(r, j) * std::conj(b.vectors().at(c, j));
            m.at(r, c) = acc;
        }
    return validate_density(m);
}

inline CMatrix diag2(double a, double b) {
    CMatrix m(2);
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    return m;
}

} // namespace qdc::testutil
