#include "gfsim/pauli.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gfsim {

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw std::logic_error("invalid Pauli symbol");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli character '") + c + "'");
  }
}

PauliString PauliString::from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty Pauli string");
  std::vector<Pauli> syms;
  syms.reserve(text.size());
  for (char c : text) syms.push_back(pauli_from_char(c));
  return PauliString(std::move(syms));
}

PauliString PauliString::identity(int n_qubits) {
  if (n_qubits <= 0) throw std::invalid_argument("register size must be positive");
  return PauliString(std::vector<Pauli>(n_qubits, Pauli::I));
}

bool PauliString::is_identity() const {
  for (Pauli s : symbols_)
    if (s != Pauli::I) return false;
  return true;
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Pauli s : symbols_) out.push_back(to_char(s));
  return out;
}

std::complex<double> QuarterPhase::value() const {
  static const std::array<std::complex<double>, 4> table = {
      std::complex<double>(1, 0), std::complex<double>(0, 1),
      std::complex<double>(-1, 0), std::complex<double>(0, -1)};
  return table[q_];
}

namespace {

// Single-qubit products: sym[a][b] and the power of i in a*b.
// X*Y = iZ, Y*Z = iX, Z*X = iY; reversed order picks up -i.
constexpr std::uint8_t kProd[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0}};
constexpr int kPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0}};

void check_same_length(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("Pauli string length mismatch: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
}

}  // namespace

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  check_same_length(a, b);
  std::vector<Pauli> out(a.size());
  int q = 0;
  for (int k = 0; k < a.size(); ++k) {
    const auto ia = static_cast<int>(a.at(k));
    const auto ib = static_cast<int>(b.at(k));
    out[k] = static_cast<Pauli>(kProd[ia][ib]);
    q += kPhase[ia][ib];
  }
  return PauliProduct{QuarterPhase(q), PauliString(std::move(out))};
}

CommutatorClass commutator_class(const PauliString& a, const PauliString& b) {
  check_same_length(a, b);
  int m = 0;
  for (int k = 0; k < a.size(); ++k) {
    const Pauli sa = a.at(k);
    const Pauli sb = b.at(k);
    if (sa != Pauli::I && sb != Pauli::I && sa != sb) ++m;
  }
  return (m % 2 == 0) ? CommutatorClass::Commuting : CommutatorClass::Anticommuting;
}

int weight(const PauliString& p) {
  int w = 0;
  for (Pauli s : p.symbols())
    if (s != Pauli::I) ++w;
  return w;
}

PauliSum::PauliSum(int n_qubits, const std::vector<PauliTerm>& terms)
    : n_qubits_(n_qubits) {
  for (const auto& t : terms) add(t.coefficient, t.string);
}

void PauliSum::add(double coefficient, const PauliString& string) {
  if (string.size() != n_qubits_)
    throw std::invalid_argument("term register size " + std::to_string(string.size()) +
                                " does not match sum size " + std::to_string(n_qubits_));
  if (!std::isfinite(coefficient))
    throw std::invalid_argument("non-finite coefficient");
  for (auto& t : terms_) {
    if (t.string == string) {
      t.coefficient += coefficient;
      prune();
      return;
    }
  }
  terms_.push_back(PauliTerm{coefficient, string});
  prune();
}

void PauliSum::prune() {
  constexpr double kZeroTol = 1e-14;
  std::erase_if(terms_, [](const PauliTerm& t) { return std::abs(t.coefficient) < kZeroTol; });
}

double PauliSum::identity_coefficient() const {
  for (const auto& t : terms_)
    if (t.string.is_identity()) return t.coefficient;
  return 0.0;
}

std::vector<PauliTerm> PauliSum::non_identity_terms() const {
  std::vector<PauliTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_)
    if (!t.string.is_identity()) out.push_back(t);
  return out;
}

std::string PauliSum::to_text() const {
  std::ostringstream os;
  os.precision(17);
  for (const auto& t : terms_) os << t.coefficient << '\t' << t.string.str() << '\n';
  return os.str();
}

PauliSum PauliSum::from_text(std::string_view text) {
  std::vector<PauliTerm> terms;
  int n = -1;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected \"coefficient<TAB>string\"");
    std::size_t pos = 0;
    const double c = std::stod(line.substr(0, tab), &pos);
    if (pos != tab)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad coefficient");
    PauliString s = PauliString::from_string(line.substr(tab + 1));
    if (n < 0) n = s.size();
    if (s.size() != n)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": inconsistent register size");
    for (const auto& t : terms)
      if (t.string == s)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate string " + s.str());
    terms.push_back(PauliTerm{c, std::move(s)});
  }
  if (n < 0) throw std::invalid_argument("empty Pauli sum text");
  return PauliSum(n, terms);
}

double average_weight(const PauliSum& h, bool include_identity) {
  long total = 0;
  long count = 0;
  for (const auto& t : h.terms()) {
    if (!include_identity && t.string.is_identity()) continue;
    total += weight(t.string);
    ++count;
  }
  if (count == 0) throw std::invalid_argument("average weight of empty Pauli sum");
  return static_cast<double>(total) / static_cast<double>(count);
}

std::ostream& operator<<(std::ostream& os, const PauliString& p) { return os << p.str(); }

}  // namespace gfsim
