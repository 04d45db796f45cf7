#include "qganlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qganlab/errors.hpp"

namespace qgan {

double tv_distance(const ProbabilityVector& p, const ProbabilityVector& q) {
  if (p.size() != q.size()) throw DimensionError("tv_distance: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return std::min(0.5 * sum, 1.0);
}

double kl_divergence(const ProbabilityVector& p, const ProbabilityVector& q) {
  if (p.size() != q.size()) throw DimensionError("kl_divergence: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) sum += p[i] * std::log(p[i] / std::max(q[i], 1e-12));
  }
  return sum;
}

std::optional<int> iterations_to_convergence(std::span<const double> tv_history, double epsilon,
                                             int patience) {
  if (patience < 1) throw SpecError("patience must be >= 1");
  int streak = 0;
  for (std::size_t i = 0; i < tv_history.size(); ++i) {
    streak = tv_history[i] < epsilon ? streak + 1 : 0;
    if (streak >= patience) return static_cast<int>(i) + 1;  // 1-based
  }
  return std::nullopt;
}

CompareReport build_compare_report(const std::map<std::string, MethodRuns>& runs) {
  if (runs.empty()) throw SpecError("build_compare_report: no methods given");
  CompareReport report;
  for (const auto& [label, method_runs] : runs) {
    if (method_runs.empty()) {
      throw SpecError("build_compare_report: method '" + label + "' has no runs");
    }
    MethodSummary summary;
    std::vector<double> converged_iterations;
    for (const auto& [seed, result] : method_runs) {
      summary.seeds.push_back(seed);
      summary.iterations.push_back(result.iterations_to_convergence);
      if (result.iterations_to_convergence) {
        converged_iterations.push_back(static_cast<double>(*result.iterations_to_convergence));
      }
      if (result.history.empty()) {
        summary.final_tv.push_back(std::numeric_limits<double>::quiet_NaN());
        summary.final_fidelity.push_back(std::numeric_limits<double>::quiet_NaN());
      } else {
        summary.final_tv.push_back(result.history.back().tv_to_target);
        summary.final_fidelity.push_back(result.history.back().fidelity_to_target);
      }
    }
    summary.converged_fraction =
        static_cast<double>(converged_iterations.size()) / static_cast<double>(method_runs.size());
    if (!converged_iterations.empty()) {
      std::sort(converged_iterations.begin(), converged_iterations.end());
      const std::size_t n = converged_iterations.size();
      summary.median_iterations = (n % 2 == 1)
                                      ? converged_iterations[n / 2]
                                      : 0.5 * (converged_iterations[n / 2 - 1] + converged_iterations[n / 2]);
    }
    report.methods.emplace(label, std::move(summary));
  }
  return report;
}

}  // namespace qgan
