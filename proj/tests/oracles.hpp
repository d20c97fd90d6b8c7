// Brute-force reference computations used by the tests. Deliberately
// independent of the library's linear algebra.
#ifndef MFCAT_TESTS_ORACLES_HPP
#define MFCAT_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

namespace oracle {

using Mono = std::vector<int>;
using Poly = std::map<Mono, mpq_class>;

inline Poly derivative(const Poly& p, std::size_t i) {
  Poly out;
  for (const auto& [m, c] : p) {
    if (m[i] == 0) continue;
    Mono e = m;
    e[i] -= 1;
    out[e] += c * m[i];
  }
  return out;
}

inline std::vector<Mono> monomials_of_degree(std::size_t n, int d) {
  std::vector<Mono> out;
  Mono cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

// Rank of a dense matrix over Q by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// dim k[x]/(dw) for w homogeneous of degree `deg` in n variables with an
// isolated critical point: sum over degrees of (#monomials - rank of the
// Jacobian ideal in that degree). Returns -1 if the quotient has not died
// out one degree past the expected socle degree n(deg - 2).
inline long milnor_homogeneous(const Poly& w, std::size_t n, int deg) {
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < n; ++i) partials.push_back(derivative(w, i));
  const int top = static_cast<int>(n) * (deg - 2) + 1;
  long total = 0;
  for (int d = 0; d <= top; ++d) {
    std::vector<Mono> basis = monomials_of_degree(n, d);
    std::map<Mono, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    std::vector<std::vector<mpq_class>> rows;
    if (d >= deg - 1) {
      for (const Mono& m : monomials_of_degree(n, d - (deg - 1))) {
        for (const Poly& p : partials) {
          std::vector<mpq_class> row(basis.size());
          for (const auto& [e, c] : p) {
            Mono s = e;
            for (std::size_t i = 0; i < n; ++i) s[i] += m[i];
            row[index.at(s)] += c;
          }
          rows.push_back(std::move(row));
        }
      }
    }
    const long q = static_cast<long>(basis.size() - rank(rows));
    if (d == top && q != 0) return -1;
    total += q;
  }
  return total;
}

// Milnor-Orlik: mu = prod (1/q_i - 1) for weights q_i; for a homogeneous
// potential of degree d in n variables that is (d - 1)^n.
inline long milnor_orlik_homogeneous(std::size_t n, int deg) {
  long mu = 1;
  for (std::size_t i = 0; i < n; ++i) mu *= deg - 1;
  return mu;
}

}  // namespace oracle

#endif  // MFCAT_TESTS_ORACLES_HPP
