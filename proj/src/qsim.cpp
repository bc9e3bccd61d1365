#include "qdc/qsim.hpp"

#include <bit>
#include <cmath>

namespace qdc {

namespace {

void require_block(int n, const char *where) {
    if (n < 1 || n > 20) throw BlockTooLarge(std::string(where) + ": qubit count must be in [1, 20]");
}

std::vector<double> eta_powers(const ProbDist &eta, int n, bool ones) {
    std::vector<double> pw(n + 1, 1.0);
    const double base = ones ? eta[1] : eta[0];
    for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * base;
    return pw;
}

} // namespace

StateVector make_state(int n, std::vector<cplx> amps) {
    require_block(n, "make_state");
    if (amps.size() != (1u << n)) throw DimensionMismatch("make_state: amplitude count != 2^n");
    double norm2 = 0.0;
    for (const auto &a : amps) norm2 += std::norm(a);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) throw ValidationError("make_state: state is not normalized");
    return StateVector{n, std::move(amps)};
}

StateVector basis_state(int n, uint32_t index) {
    require_block(n, "basis_state");
    std::vector<cplx> amps(1u << n, cplx(0.0, 0.0));
    amps.at(index) = cplx(1.0, 0.0);
    return StateVector{n, std::move(amps)};
}

PermutationUnitary lift_code(const BlockBijection &code) {
    require_block(code.n, "lift_code");
    return PermutationUnitary{code.n, code.forward, code.inverse};
}

PermutationUnitary inverse_of(const PermutationUnitary &u) {
    return PermutationUnitary{u.n, u.inv, u.perm};
}

StateVector apply_permutation(const PermutationUnitary &u, const StateVector &psi) {
    if (u.n != psi.n) throw DimensionMismatch("apply_permutation: qubit counts differ");
    std::vector<cplx> out(psi.amps.size());
    for (size_t x = 0; x < psi.amps.size(); ++x) out[u.perm[x]] = psi.amps[x];
    return StateVector{psi.n, std::move(out)};
}

TwoRegisterState two_register_step1(const BlockBijection &phi, TwoRegisterState s) {
    return TwoRegisterState{s.input_reg, s.output_reg ^ phi.forward[s.input_reg]};
}

TwoRegisterState two_register_step2(const BlockBijection &phi, TwoRegisterState s) {
    return TwoRegisterState{s.input_reg ^ phi.inverse[s.output_reg], s.output_reg};
}

TwoRegisterState two_register_transform(const BlockBijection &phi, uint32_t x) {
    if (x >= (1u << phi.n)) throw DimensionMismatch("two_register_transform: index outside register");
    return two_register_step2(phi, two_register_step1(phi, TwoRegisterState{x, 0}));
}

LengthObservable length_observable(int n) {
    require_block(n, "length_observable");
    std::vector<uint8_t> lengths(1u << n);
    for (uint32_t w = 0; w < (1u << n); ++w) lengths[w] = static_cast<uint8_t>(std::bit_width(w));
    return LengthObservable{n, std::move(lengths)};
}

double expectation(const LengthObservable &obs, const StateVector &psi) {
    if (obs.n != psi.n) throw DimensionMismatch("expectation: qubit counts differ");
    double acc = 0.0;
    for (size_t w = 0; w < psi.amps.size(); ++w) acc += std::norm(psi.amps[w]) * obs.lengths[w];
    return acc;
}

ProbDist product_diagonal(const DensityMatrix &rho, const OrthonormalBasis &basis, int n) {
    require_block(n, "product_diagonal");
    if (rho.dim() != 2 || basis.dim() != 2)
        throw DimensionMismatch("product_diagonal: source must be a qubit");
    const ProbDist eta = effective_density(rho, basis).eta;
    const auto pw0 = eta_powers(eta, n, false);
    const auto pw1 = eta_powers(eta, n, true);
    std::vector<double> w(1u << n);
    for (uint32_t x = 0; x < (1u << n); ++x) {
        const int k = std::popcount(x);
        w[x] = pw0[n - k] * pw1[k];
    }
    return ProbDist(std::move(w));
}

double expected_length(const DensityMatrix &rho, const OrthonormalBasis &basis, const BlockBijection &code) {
    const ProbDist pd = product_diagonal(rho, basis, code.n);
    double acc = 0.0;
    for (uint32_t x = 0; x < pd.size(); ++x)
        acc += pd[x] * static_cast<double>(std::bit_width(code.forward[x]));
    return acc / code.n;
}

double truncation_fidelity(const DensityMatrix &rho, const OrthonormalBasis &basis, const BlockBijection &code,
                           int m) {
    if (m < 0 || m > code.n) throw ValidationError("truncation_fidelity: kept qubits must be in [0, n]");
    const ProbDist pd = product_diagonal(rho, basis, code.n);
    // Accumulate the lost tail so m = n comes out exactly 1.
    double tail = 0.0;
    for (uint32_t x = 0; x < pd.size(); ++x) {
        if (std::bit_width(code.forward[x]) > static_cast<unsigned>(m)) tail += pd[x];
    }
    return 1.0 - tail;
}

} // namespace qdc
