#pragma once

#include "qdc/coding.hpp"
#include "qdc/linalg.hpp"
#include "qdc/quantum.hpp"

namespace qdc {

// Dense n-qubit amplitude vector, unit norm, n <= 20. Basis index i is the
// big-endian reading of the bit string, matching BlockBijection.
struct StateVector {
    int n;
    std::vector<cplx> amps;
};

StateVector make_state(int n, std::vector<cplx> amps);
StateVector basis_state(int n, uint32_t index);

// Basis-permutation unitary U|x> = |perm(x)>.
struct PermutationUnitary {
    int n;
    std::vector<uint32_t> perm;
    std::vector<uint32_t> inv;
};

// Quantum extension of a reversible block code: perm = forward.
PermutationUnitary lift_code(const BlockBijection &code);
PermutationUnitary inverse_of(const PermutationUnitary &u);

StateVector apply_permutation(const PermutationUnitary &u, const StateVector &psi);

// Two-register XOR construction on basis states:
//   step 1: |x>|y> -> |x>|y xor phi(x)>
//   step 2: |x>|w> -> |x xor phi^{-1}(w)>|w>
struct TwoRegisterState {
    uint32_t input_reg;
    uint32_t output_reg;
};

TwoRegisterState two_register_step1(const BlockBijection &phi, TwoRegisterState s);
TwoRegisterState two_register_step2(const BlockBijection &phi, TwoRegisterState s);
// Both steps from |x>|0...0>; lands on |0...0>|phi(x)>.
TwoRegisterState two_register_transform(const BlockBijection &phi, uint32_t x);

// Diagonal observable whose eigenvalue at |w> is w's significant length.
struct LengthObservable {
    int n;
    std::vector<uint8_t> lengths;
};

LengthObservable length_observable(int n);
double expectation(const LengthObservable &obs, const StateVector &psi);

// Diagonal of rho^{tensor n} in the product basis: the product distribution
// of the effective eigenvalues eta. Requires dim(rho) = 2 and n <= 20.
ProbDist product_diagonal(const DensityMatrix &rho, const OrthonormalBasis &basis, int n);

// Expected compressed length per symbol:
//   (1/n) sum_x product_diagonal(x) * significant_length(perm(x)).
// Coincides with expected_block_rate(eta, code).
double expected_length(const DensityMatrix &rho, const OrthonormalBasis &basis, const BlockBijection &code);

// Probability that a codeword survives truncation to its m lowest
// significant qubits: total mass of strings with significant length <= m.
double truncation_fidelity(const DensityMatrix &rho, const OrthonormalBasis &basis, const BlockBijection &code,
                           int m);

} // namespace qdc
