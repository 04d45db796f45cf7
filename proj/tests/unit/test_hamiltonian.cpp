#include <cmath>
#include <numbers>

#include "doctest.h"

#include "qganlab/errors.hpp"
#include "qganlab/hamiltonian.hpp"
#include "qganlab/rng.hpp"

using namespace qgan;

namespace {

ComplexMatrix taylor_exponential(const ComplexMatrix& h, double t, int terms) {
  ComplexMatrix sum = ComplexMatrix::Identity(h.rows(), h.cols());
  ComplexMatrix term = sum;
  const ComplexMatrix step = Complex(0.0, -t) * h;
  for (int k = 1; k <= terms; ++k) {
    term = term * step / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("assemble single term") {
  HamiltonianSpec spec{1, {{1.0, PauliString("Z")}}, {}, 0.0, 1.0};
  const ComplexMatrix h = assemble_hamiltonian(spec);
  CHECK(h(0, 0) == Complex(1, 0));
  CHECK(h(1, 1) == Complex(-1, 0));
}

TEST_CASE("lambda zero erases the enhancement term") {
  HamiltonianSpec with_v{1, {{1.0, PauliString("Z")}}, {{1.0, PauliString("X")}}, 0.0, 1.0};
  HamiltonianSpec base_only{1, {{1.0, PauliString("Z")}}, {}, 0.0, 1.0};
  CHECK(assemble_hamiltonian(with_v) == assemble_hamiltonian(base_only));
}

TEST_CASE("lambda scales the enhancement term") {
  // Z + 2X = [[1, 2], [2, -1]]
  HamiltonianSpec spec{1, {{1.0, PauliString("Z")}}, {{1.0, PauliString("X")}}, 2.0, 1.0};
  const ComplexMatrix h = assemble_hamiltonian(spec);
  CHECK(h(0, 0) == Complex(1, 0));
  CHECK(h(0, 1) == Complex(2, 0));
  CHECK(h(1, 0) == Complex(2, 0));
  CHECK(h(1, 1) == Complex(-1, 0));
}

TEST_CASE("assemble rejects mismatched qubit counts and bad lambda") {
  HamiltonianSpec mixed{2, {{1.0, PauliString("Z")}}, {}, 0.0, 1.0};
  CHECK_THROWS_AS(assemble_hamiltonian(mixed), SpecError);
  HamiltonianSpec negative{1, {{1.0, PauliString("Z")}}, {}, -0.5, 1.0};
  CHECK_THROWS_AS(assemble_hamiltonian(negative), SpecError);
}

TEST_CASE("evolve at t = 0 is the identity") {
  HamiltonianSpec spec{2, {{0.7, PauliString("XZ")}, {-0.3, PauliString("YI")}}, {}, 0.0, 1.0};
  const ComplexMatrix u = evolve_unitary(assemble_hamiltonian(spec), 0.0);
  CHECK(max_abs(u - ComplexMatrix::Identity(4, 4)) < 1e-12);
}

TEST_CASE("evolving X for pi/2 gives -iX") {
  const ComplexMatrix u = evolve_unitary(pauli_matrix(PauliString("X")), std::numbers::pi / 2);
  const ComplexMatrix expected = Complex(0, -1) * pauli_matrix(PauliString("X"));
  CHECK(max_abs(u - expected) < 1e-12);
}

TEST_CASE("evolve matches the truncated Taylor series") {
  Rng rng(321);
  ComplexMatrix a(8, 8);
  for (Eigen::Index j = 0; j < 8; ++j) {
    for (Eigen::Index i = 0; i < 8; ++i) {
      a(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
  }
  ComplexMatrix h = 0.5 * (a + a.adjoint());
  double radius = 0.0;
  for (Eigen::Index i = 0; i < 8; ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < 8; ++j) row += std::abs(h(i, j));
    radius = std::max(radius, row);
  }
  h *= 5.0 / radius;
  CHECK(max_abs(evolve_unitary(h, 1.0) - taylor_exponential(h, 1.0, 40)) < 1e-8);
}

TEST_CASE("evolve rejects non-hermitian input") {
  ComplexMatrix bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(evolve_unitary(bad, 1.0), SpecError);
}

TEST_CASE("evolution composes over time") {
  HamiltonianSpec spec{1, {{0.9, PauliString("X")}, {0.4, PauliString("Z")}}, {}, 0.0, 1.0};
  const ComplexMatrix h = assemble_hamiltonian(spec);
  const ComplexMatrix lhs = evolve_unitary(h, 0.6) * evolve_unitary(h, 0.9);
  CHECK(max_abs(lhs - evolve_unitary(h, 1.5)) < 1e-9);
}

TEST_CASE("parameter get and set round trip") {
  HamiltonianSpec spec{1, {{0.0, PauliString("X")}, {0.0, PauliString("Z")}}, {}, 0.0, 1.0};
  set_parameters(spec, {0.25, -1.5});
  CHECK(get_parameters(spec) == std::vector<double>{0.25, -1.5});
  CHECK_THROWS_AS(set_parameters(spec, {1.0}), SpecError);
}
