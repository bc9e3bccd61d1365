#pragma once

#include <vector>

#include "qdc/errors.hpp"

namespace qdc {

// Finite probability distribution: nonnegative weights summing to 1
// within 1e-9. Zero entries are allowed.
class ProbDist {
  public:
    explicit ProbDist(std::vector<double> weights);

    static ProbDist binary(double p1) { return ProbDist({1.0 - p1, p1}); }
    // Clamps eigenvalues in [-1e-10, 0) to zero before validating.
    static ProbDist from_eigenvalues(std::vector<double> eigenvalues);

    size_t size() const { return w_.size(); }
    double operator[](size_t i) const { return w_[i]; }
    const std::vector<double> &weights() const { return w_; }

  private:
    std::vector<double> w_;
};

// H(p) = -sum p log2 p, zero terms skipped.
double shannon_entropy(const ProbDist &p);

// D(q||p) = sum q log2(q/p); +infinity when q has mass (> 1e-12) where
// p has none (< 1e-15).
double relative_entropy(const ProbDist &q, const ProbDist &p);

} // namespace qdc
