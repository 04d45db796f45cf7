#include "qganlab/probability.hpp"

#include <cmath>
#include <string>

#include "qganlab/errors.hpp"

namespace qgan {

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw SpecError("probability vector must be nonempty");
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double p = probs_[i];
    if (!std::isfinite(p)) {
      throw NumericError("probability entry " + std::to_string(i) + " is not finite");
    }
    if (p < 0.0) {
      throw SpecError("probability entry " + std::to_string(i) + " is negative (" + std::to_string(p) + ")");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw SpecError("probabilities sum to " + std::to_string(sum) + ", expected 1 within 1e-9");
  }
}

}  // namespace qgan
