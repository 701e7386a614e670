#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gfsim {

/// Single-qubit Pauli symbol. Values are chosen so that X^Z bit tricks are
/// not needed anywhere; everything goes through the multiplication table.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// An n-qubit Pauli word, stored symbol-per-qubit with qubit 1 leftmost,
/// so the 4-qubit word "XZXI" acts with X on q1, Z on q2, X on q3.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> symbols) : symbols_(std::move(symbols)) {}

  /// Parses text such as "XZXI". Throws std::invalid_argument on any
  /// character outside {I,X,Y,Z} or an empty string.
  static PauliString from_string(std::string_view text);

  /// All-identity word on n qubits.
  static PauliString identity(int n_qubits);

  int size() const { return static_cast<int>(symbols_.size()); }
  Pauli at(int qubit_index) const { return symbols_.at(qubit_index); }
  const std::vector<Pauli>& symbols() const { return symbols_; }

  bool is_identity() const;
  std::string str() const;

  bool operator==(const PauliString& other) const = default;
  auto operator<=>(const PauliString& other) const = default;

 private:
  std::vector<Pauli> symbols_;
};

/// Exact product phase, one of {+1, -1, +i, -i}, kept as a power of i so
/// phase composition stays integer arithmetic.
class QuarterPhase {
 public:
  constexpr QuarterPhase() = default;
  constexpr explicit QuarterPhase(int power_of_i) : q_((power_of_i % 4 + 4) % 4) {}

  constexpr int power_of_i() const { return q_; }
  std::complex<double> value() const;

  constexpr QuarterPhase operator*(QuarterPhase other) const {
    return QuarterPhase(q_ + other.q_);
  }
  bool operator==(const QuarterPhase&) const = default;

 private:
  int q_ = 0;
};

struct PauliProduct {
  QuarterPhase phase;
  PauliString string;
};

/// Exact matrix product a*b = phase * string. Throws on length mismatch.
PauliProduct multiply(const PauliString& a, const PauliString& b);

enum class CommutatorClass { Commuting, Anticommuting };

/// Two Pauli words either commute or anticommute; they commute iff the
/// number of positions where both symbols are non-identity and different
/// is even. Throws on length mismatch.
CommutatorClass commutator_class(const PauliString& a, const PauliString& b);

inline bool commutes(const PauliString& a, const PauliString& b) {
  return commutator_class(a, b) == CommutatorClass::Commuting;
}

/// Number of non-identity symbols.
int weight(const PauliString& p);

struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;
};

/// A real-weighted sum of distinct Pauli words on a fixed register size.
/// Zero-coefficient terms are dropped at construction; duplicate strings
/// are merged. Term order is the insertion order of first occurrence.
class PauliSum {
 public:
  explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}
  PauliSum(int n_qubits, const std::vector<PauliTerm>& terms);

  /// Accumulates coeff * string, merging into an existing term if present.
  void add(double coefficient, const PauliString& string);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the all-identity term (0 if absent).
  double identity_coefficient() const;

  /// Terms excluding the identity word, in stored order.
  std::vector<PauliTerm> non_identity_terms() const;

  /// One term per line, "coefficient<TAB>string", round-trip stable.
  std::string to_text() const;
  static PauliSum from_text(std::string_view text);

 private:
  void prune();

  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

/// Mean Pauli weight over the sum's terms. Throws std::invalid_argument if
/// no terms remain after (optionally) dropping the identity term.
double average_weight(const PauliSum& h, bool include_identity = false);

std::ostream& operator<<(std::ostream& os, const PauliString& p);

}  // namespace gfsim
