#pragma once

#include <cstddef>
#include <vector>

namespace qgan {

/** Discrete distribution over 2^n computational-basis outcomes.
 *
 *  Entries are nonnegative and sum to 1 within 1e-9; both are checked at
 *  construction. */
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> probs);

  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  bool operator==(const ProbabilityVector& other) const = default;

 private:
  std::vector<double> probs_;
};

}  // namespace qgan
