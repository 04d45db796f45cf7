#include "qganlab/pauli.hpp"

#include "qganlab/errors.hpp"

namespace qgan {

namespace {

ComplexMatrix single_qubit_matrix(Pauli p) {
  ComplexMatrix m(2, 2);
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Pauli from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw SpecError(std::string("invalid Pauli character '") + c + "' (expected I, X, Y or Z)");
  }
}

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

}  // namespace

PauliString::PauliString(std::string_view ops) {
  ops_.reserve(ops.size());
  for (char c : ops) ops_.push_back(from_char(c));
  if (ops_.empty()) throw SpecError("empty Pauli string");
}

PauliString::PauliString(std::vector<Pauli> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw SpecError("empty Pauli string");
}

PauliString PauliString::identity(int n_qubits) {
  if (n_qubits < 1) throw SpecError("Pauli string needs at least one qubit");
  return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n_qubits), Pauli::I));
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(ops_.size());
  for (Pauli p : ops_) s.push_back(to_char(p));
  return s;
}

ComplexMatrix pauli_matrix(const PauliString& s) {
  const int n = s.n_qubits();
  if (n < 1 || n > kMaxQubits) {
    throw DimensionError("Pauli string length " + std::to_string(n) + " outside supported range [1, " +
                         std::to_string(kMaxQubits) + "]");
  }
  // qubit 0 is the leftmost factor = most significant index bit
  ComplexMatrix m = single_qubit_matrix(s.ops()[0]);
  for (int q = 1; q < n; ++q) {
    m = kron(m, single_qubit_matrix(s.ops()[static_cast<std::size_t>(q)]));
  }
  return m;
}

}  // namespace qgan
