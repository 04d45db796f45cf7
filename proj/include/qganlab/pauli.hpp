#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qganlab/linalg.hpp"

namespace qgan {

/** Single-qubit Pauli operators (and identity). */
enum class Pauli { I, X, Y, Z };

/// Largest supported register; dense matrices get unwieldy beyond this.
inline constexpr int kMaxQubits = 10;

/** Tensor product of single-qubit Paulis, one per qubit.
 *
 *  Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of a
 *  computational-basis index. */
class PauliString {
 public:
  /// Parse from a string such as "XIZ"; one character per qubit.
  explicit PauliString(std::string_view ops);
  explicit PauliString(std::vector<Pauli> ops);

  static PauliString identity(int n_qubits);

  const std::vector<Pauli>& ops() const { return ops_; }
  int n_qubits() const { return static_cast<int>(ops_.size()); }
  std::string str() const;

  bool operator==(const PauliString& other) const = default;

 private:
  std::vector<Pauli> ops_;
};

/** Dense 2^n x 2^n matrix of a Pauli string (qubit 0 leftmost). */
ComplexMatrix pauli_matrix(const PauliString& s);

}  // namespace qgan
