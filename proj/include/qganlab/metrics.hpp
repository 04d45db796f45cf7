#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qganlab/probability.hpp"
#include "qganlab/train.hpp"

namespace qgan {

/** Total variation distance (1/2) sum |p_i - q_i|. */
double tv_distance(const ProbabilityVector& p, const ProbabilityVector& q);

/** sum_{p_i > 0} p_i log(p_i / max(q_i, 1e-12)), with 0 log 0 = 0. */
double kl_divergence(const ProbabilityVector& p, const ProbabilityVector& q);

/** Smallest 1-based index i such that tv < epsilon at all of
 *  i-patience+1 ... i; nullopt if no such window exists. */
std::optional<int> iterations_to_convergence(std::span<const double> tv_history, double epsilon,
                                             int patience);

struct MethodSummary {
  std::vector<std::uint64_t> seeds;
  std::vector<std::optional<int>> iterations;  // per seed; nullopt = not converged
  std::optional<double> median_iterations;     // over converged runs only
  double converged_fraction = 0.0;
  std::vector<double> final_tv;
  std::vector<double> final_fidelity;
};

/** Per-method convergence-speed aggregation for the speedup comparison. */
struct CompareReport {
  std::map<std::string, MethodSummary> methods;
};

using MethodRuns = std::vector<std::pair<std::uint64_t, TrainingResult>>;

/** Aggregates per-seed results per method. Medians are taken over converged
 *  runs only; an even-length median is the mean of the two central values. */
CompareReport build_compare_report(const std::map<std::string, MethodRuns>& runs);

}  // namespace qgan
