#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

#include "qganlab/encoding.hpp"
#include "qganlab/errors.hpp"
#include "qganlab/rng.hpp"

using namespace qgan;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& contents) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << contents;
  return path;
}

}  // namespace

TEST_CASE("empirical distribution counts") {
  const std::vector<std::uint64_t> even{0, 0, 1, 1};
  CHECK(empirical_distribution(even, 1).probs() == std::vector<double>{0.5, 0.5});
  const std::vector<std::uint64_t> skewed{0, 0, 0, 1};
  CHECK(empirical_distribution(skewed, 1).probs() == std::vector<double>{0.75, 0.25});
}

TEST_CASE("empirical distribution rejects bad input") {
  CHECK_THROWS_AS(empirical_distribution(std::vector<std::uint64_t>{}, 1), SpecError);
  const std::vector<std::uint64_t> out_of_range{0, 2};
  CHECK_THROWS_AS(empirical_distribution(out_of_range, 1), SpecError);
}

TEST_CASE("empirical distribution concentrates with many draws") {
  // sampling oracle: inverse-CDF draws from (0.5, 0, 0, 0.5) with seed 42
  const std::vector<double> target{0.5, 0.0, 0.0, 0.5};
  Rng rng(42);
  std::vector<std::uint64_t> samples;
  samples.reserve(10000);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform(0.0, 1.0);
    double acc = 0.0;
    std::uint64_t outcome = 3;
    for (std::uint64_t k = 0; k < 4; ++k) {
      acc += target[k];
      if (u < acc) {
        outcome = k;
        break;
      }
    }
    samples.push_back(outcome);
  }
  const ProbabilityVector p = empirical_distribution(samples, 2);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(p[i] - target[i]) < 0.02);
}

TEST_CASE("encoding is diagonal with the right purity") {
  const DensityMatrix pure = encode_distribution(ProbabilityVector({1.0, 0.0}));
  CHECK(pure.matrix()(0, 0) == Complex(1, 0));
  CHECK(pure.matrix()(1, 1) == Complex(0, 0));
  CHECK(pure.matrix()(0, 1) == Complex(0, 0));

  const DensityMatrix mixed = encode_distribution(ProbabilityVector({0.5, 0.5}));
  CHECK((mixed.matrix() * mixed.matrix()).trace().real() == doctest::Approx(0.5).epsilon(1e-12));

  const DensityMatrix skewed = encode_distribution(ProbabilityVector({0.75, 0.25}));
  CHECK(skewed.matrix()(0, 0).real() == 0.75);
  CHECK(skewed.matrix()(1, 1).real() == 0.25);
  CHECK((skewed.matrix() * skewed.matrix()).trace().real() == doctest::Approx(0.625).epsilon(1e-12));
}

TEST_CASE("encode then measure is the identity") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> p(4);
    double sum = 0.0;
    for (double& v : p) {
      v = rng.uniform(0.0, 1.0);
      sum += v;
    }
    for (double& v : p) v /= sum;
    const ProbabilityVector in(p);
    const ProbabilityVector out = measure_probabilities(encode_distribution(in));
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(in[i] - out[i]) < 1e-12);
  }
}

TEST_CASE("load_dataset passes inline lists through") {
  DatasetSpec spec;
  spec.inline_probs = std::vector<double>{0.75, 0.25};
  spec.n_qubits = 1;
  CHECK(load_dataset(spec).probs() == std::vector<double>{0.75, 0.25});
}

TEST_CASE("load_dataset rejects unnormalized inline lists") {
  DatasetSpec spec;
  spec.inline_probs = std::vector<double>{0.5, 0.6};
  spec.n_qubits = 1;
  CHECK_THROWS_AS(load_dataset(spec), SpecError);
}

TEST_CASE("load_dataset counts sample files") {
  const auto path = write_temp("qganlab_samples.txt", "0\n1\n0\n0\n");
  DatasetSpec spec;
  spec.sample_file = path;
  spec.n_qubits = 1;
  CHECK(load_dataset(spec).probs() == std::vector<double>{0.75, 0.25});
  std::filesystem::remove(path);
}

TEST_CASE("load_dataset accepts CRLF and a missing trailing newline") {
  const auto path = write_temp("qganlab_samples_crlf.txt", "1\r\n0\r\n1\r\n1");
  DatasetSpec spec;
  spec.sample_file = path;
  spec.n_qubits = 1;
  CHECK(load_dataset(spec).probs() == std::vector<double>{0.25, 0.75});
  std::filesystem::remove(path);
}

TEST_CASE("load_dataset reports the failing line") {
  const auto path = write_temp("qganlab_samples_bad.txt", "0\n1\nbanana\n");
  DatasetSpec spec;
  spec.sample_file = path;
  spec.n_qubits = 1;
  try {
    load_dataset(spec);
    FAIL("expected a parse error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST_CASE("load_dataset distinguishes missing files") {
  DatasetSpec spec;
  spec.sample_file = std::filesystem::path("/nonexistent/qganlab.txt");
  spec.n_qubits = 1;
  CHECK_THROWS_AS(load_dataset(spec), IoError);
}
