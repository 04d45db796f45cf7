#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "qganlab/probability.hpp"
#include "qganlab/state.hpp"

namespace qgan {

/** Where a target distribution comes from: an inline probability list, or a
 *  sample file with one base-10 outcome index per line. */
struct DatasetSpec {
  std::optional<std::vector<double>> inline_probs;
  std::optional<std::filesystem::path> sample_file;
  int n_qubits = 1;
};

/** Normalized histogram of outcome indices over 2^n bins. */
ProbabilityVector empirical_distribution(std::span<const std::uint64_t> samples, int n_qubits);

/** Diagonal density matrix sum_i p_i |i><i| over computational basis states. */
DensityMatrix encode_distribution(const ProbabilityVector& p);

ProbabilityVector load_dataset(const DatasetSpec& spec);

}  // namespace qgan
