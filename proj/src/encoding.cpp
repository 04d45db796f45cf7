#include "qganlab/encoding.hpp"

#include <fstream>
#include <string>

#include "qganlab/errors.hpp"
#include "qganlab/pauli.hpp"

namespace qgan {

ProbabilityVector empirical_distribution(std::span<const std::uint64_t> samples, int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("n_qubits outside supported range [1, " + std::to_string(kMaxQubits) + "]");
  }
  if (samples.empty()) throw SpecError("empirical_distribution needs at least one sample");
  const std::uint64_t n_outcomes = std::uint64_t(1) << n_qubits;
  std::vector<double> counts(n_outcomes, 0.0);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i] >= n_outcomes) {
      throw SpecError("sample " + std::to_string(i) + " has value " + std::to_string(samples[i]) +
                      ", outside [0, " + std::to_string(n_outcomes) + ")");
    }
    counts[samples[i]] += 1.0;
  }
  const double total = static_cast<double>(samples.size());
  for (double& c : counts) c /= total;
  return ProbabilityVector(std::move(counts));
}

DensityMatrix encode_distribution(const ProbabilityVector& p) {
  const auto dim = static_cast<Eigen::Index>(p.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += p[i];
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  // dividing by the (within-1e-9-of-1) sum keeps the trace exact; a no-op
  // bitwise when the input sums to exactly 1
  for (Eigen::Index i = 0; i < dim; ++i) m(i, i) = p[static_cast<std::size_t>(i)] / sum;
  return DensityMatrix(std::move(m));
}

ProbabilityVector load_dataset(const DatasetSpec& spec) {
  if (spec.inline_probs.has_value() == spec.sample_file.has_value()) {
    throw ConfigError("dataset spec must have exactly one of inline probabilities or a sample file");
  }
  if (spec.inline_probs) {
    const std::size_t expected = std::size_t(1) << spec.n_qubits;
    if (spec.inline_probs->size() != expected) {
      throw ConfigError("inline target has " + std::to_string(spec.inline_probs->size()) +
                        " entries, expected " + std::to_string(expected) + " for " +
                        std::to_string(spec.n_qubits) + " qubit(s)");
    }
    return ProbabilityVector(*spec.inline_probs);
  }
  std::ifstream in(*spec.sample_file);
  if (!in) throw IoError("cannot open sample file '" + spec.sample_file->string() + "'");
  std::vector<std::uint64_t> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();  // CRLF
    if (line.empty()) continue;
    std::size_t pos = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(line, &pos, 10);
    } catch (const std::exception&) {
      throw ConfigError("sample file '" + spec.sample_file->string() + "' line " +
                        std::to_string(line_no) + ": cannot parse '" + line + "' as an integer");
    }
    if (pos != line.size() || line[0] == '-') {
      throw ConfigError("sample file '" + spec.sample_file->string() + "' line " +
                        std::to_string(line_no) + ": cannot parse '" + line +
                        "' as a nonnegative integer");
    }
    samples.push_back(value);
  }
  if (in.bad()) throw IoError("I/O error while reading '" + spec.sample_file->string() + "'");
  if (samples.empty()) {
    throw ConfigError("sample file '" + spec.sample_file->string() + "' contains no samples");
  }
  try {
    return empirical_distribution(samples, spec.n_qubits);
  } catch (const SpecError& e) {
    throw ConfigError("sample file '" + spec.sample_file->string() + "': " + e.what());
  }
}

}  // namespace qgan
