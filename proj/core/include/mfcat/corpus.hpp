#ifndef MFCAT_CORPUS_HPP
#define MFCAT_CORPUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfcat/mf.hpp"

namespace mfcat {

// An expected quantity together with the method that produced it.
struct KnownValue {
  long value = 0;
  std::string oracle;
};

struct NamedFactorization {
  std::string name;
  MatrixFactorization mf;
};

struct CorpusEntry {
  std::string name;
  std::string family;
  Series potential;
  // Expected values keyed by quantity ("milnor", "tyurina", "r2", ...).
  std::map<std::string, KnownValue> known;
  // Sample objects of MF(R, w); k^stab is always first.
  std::vector<NamedFactorization> factorizations;
  // True when w has an isolated singularity at the origin.
  bool isolated = true;
  // Diagonal quadratic forms (Clifford case).
  bool diagonal_quadratic = false;

  std::size_t n_vars() const { return potential.ctx().n_vars(); }
  std::optional<long> known_value(const std::string& key) const;
};

// The bundled examples: A_n = x^{n+1} for n <= 6, x^2 + x^3 + x^5, D_4 = x^2 y + y^3,
// diagonal quadratics in up to three variables, Fermat cubics in two and three
// variables, and the 3x3 factorization of x^3 + y^3 + z^3 - 3xyz.
const std::vector<CorpusEntry>& corpus();

// Entries whose name or family contains `filter` (all when empty).
std::vector<const CorpusEntry*> corpus_select(const std::string& filter);

// phi = [[x, y, z], [z, x, y], [y, z, x]], psi = adj(phi) over
// w = x^3 + y^3 + z^3 - 3xyz.
MatrixFactorization elliptic_factorization();

}  // namespace mfcat

#endif  // MFCAT_CORPUS_HPP
