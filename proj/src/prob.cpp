#include "qdc/prob.hpp"

#include <cmath>
#include <limits>

namespace qdc {

ProbDist::ProbDist(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw BadDistribution("empty distribution");
    double sum = 0.0;
    for (double x : w_) {
        if (!std::isfinite(x)) throw BadDistribution("weight is not finite");
        if (x < 0.0) throw BadDistribution("negative weight");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw BadDistribution("weights do not sum to 1");
}

ProbDist ProbDist::from_eigenvalues(std::vector<double> eigenvalues) {
    for (double &x : eigenvalues) {
        if (x < 0.0 && x >= -1e-10) x = 0.0;
    }
    return ProbDist(std::move(eigenvalues));
}

double shannon_entropy(const ProbDist &p) {
    double h = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        const double x = p[i];
        if (x > 0.0) h -= x * std::log2(x);
    }
    return h;
}

double relative_entropy(const ProbDist &q, const ProbDist &p) {
    if (q.size() != p.size()) throw DimensionMismatch("relative_entropy: alphabet sizes differ");
    double d = 0.0;
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] > 1e-12 && p[i] < 1e-15) return std::numeric_limits<double>::infinity();
        if (q[i] > 0.0 && p[i] > 0.0) d += q[i] * std::log2(q[i] / p[i]);
    }
    return d;
}

} // namespace qdc
