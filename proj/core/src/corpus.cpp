#include "mfcat/corpus.hpp"

#include "mfcat/stabilize.hpp"

namespace mfcat {

std::optional<long> CorpusEntry::known_value(const std::string& key) const {
  auto it = known.find(key);
  if (it == known.end()) return std::nullopt;
  return it->second.value;
}

MatrixFactorization elliptic_factorization() {
  RingCtx r = RingCtx::standard(3);
  Series x = Series::variable(r, 0), y = Series::variable(r, 1), z = Series::variable(r, 2);
  RMatrix phi = RMatrix::from_rows(r, {{x, y, z}, {z, x, y}, {y, z, x}});
  Series w = parse_series("x^3 + y^3 + z^3 - 3*x*y*z", r);
  return MatrixFactorization(w, phi, adjugate(phi));
}

namespace {

CorpusEntry make_entry(std::string name, std::string family, const std::string& expr, std::size_t n_vars) {
  CorpusEntry e;
  e.name = std::move(name);
  e.family = std::move(family);
  e.potential = parse_series(expr, RingCtx::standard(n_vars));
  e.factorizations.push_back({"kstab", stabilize_residue_field(e.potential)});
  return e;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  for (long n = 1; n <= 6; ++n) {
    CorpusEntry e = make_entry("A_" + std::to_string(n), "A_n", "x^" + std::to_string(n + 1), 1);
    e.known["milnor"] = {n, "dim k[x]/(x^n)"};
    e.known["tyurina"] = {n, "dim k[x]/(x^n)"};
    e.known["r" + std::to_string(n + 1)] = {1, "coefficient of w"};
    RingCtx r = e.potential.ctx();
    Series x = Series::variable(r, 0);
    for (long k = 2; 2 * k <= n + 1; ++k) {
      RMatrix phi = RMatrix::scalar(x.pow(static_cast<unsigned>(k)), 1);
      RMatrix psi = RMatrix::scalar(x.pow(static_cast<unsigned>(n + 1 - k)), 1);
      e.factorizations.push_back({"x^" + std::to_string(k), MatrixFactorization(e.potential, phi, psi)});
    }
    if (n == 2) {
      const MatrixFactorization& k = e.factorizations[0].mf;
      e.factorizations.push_back({"kstab+kstab", direct_sum(k, k)});
    }
    out.push_back(std::move(e));
  }
  {
    CorpusEntry e = make_entry("mixed-1var", "one-variable", "x^2 + x^3 + x^5", 1);
    e.known["milnor"] = {1, "nondegenerate quadratic part"};
    e.known["tyurina"] = {1, "nondegenerate quadratic part"};
    for (int i = 2; i <= 6; ++i) e.known["r" + std::to_string(i)] = {i == 4 || i == 6 ? 0 : 1, "coefficient of w"};
    out.push_back(std::move(e));
  }
  {
    CorpusEntry e = make_entry("D_4", "D_4", "x^2*y + y^3", 2);
    e.known["milnor"] = {4, "weighted-homogeneous count (1/q_x - 1)(1/q_y - 1)"};
    e.known["tyurina"] = {4, "weighted-homogeneous: Tyurina = Milnor"};
    e.known["m3(dbar1,dbar1,dbar2)"] = {1, "coefficient of x^2 y in w"};
    out.push_back(std::move(e));
  }
  const char* quadratics[][2] = {
      {"Q1", "x^2"}, {"Q2", "x^2 + y^2"}, {"Q3", "x^2 + y^2 + z^2"}, {"Q2-weighted", "x^2 - 3*y^2"},
      {"Q3-weighted", "2*x^2 + y^2 - 5*z^2"}};
  for (const auto& q : quadratics) {
    std::size_t n = q[0][1] - '0';
    CorpusEntry e = make_entry(q[0], "quadratic", q[1], n);
    e.known["milnor"] = {1, "nondegenerate quadratic form"};
    e.known["tyurina"] = {1, "nondegenerate quadratic form"};
    e.diagonal_quadratic = true;
    out.push_back(std::move(e));
  }
  {
    CorpusEntry e = make_entry("fermat-cubic-2", "fermat", "x^3 + y^3", 2);
    e.known["milnor"] = {4, "product of one-variable Milnor numbers 2 * 2"};
    e.known["tyurina"] = {4, "weighted-homogeneous: Tyurina = Milnor"};
    out.push_back(std::move(e));
  }
  {
    CorpusEntry e = make_entry("fermat-cubic-3", "fermat", "x^3 + y^3 + z^3", 3);
    e.known["milnor"] = {8, "product of one-variable Milnor numbers 2 * 2 * 2"};
    e.known["tyurina"] = {8, "weighted-homogeneous: Tyurina = Milnor"};
    out.push_back(std::move(e));
  }
  {
    MatrixFactorization ell = elliptic_factorization();
    CorpusEntry e;
    e.name = "elliptic-3x3";
    e.family = "elliptic";
    e.potential = ell.potential();
    e.factorizations.push_back({"kstab", stabilize_residue_field(e.potential)});
    e.factorizations.push_back({"elliptic", ell});
    // x^3 + y^3 + z^3 - 3xyz is a product of three lines: singular along
    // the line x = y = z.
    e.isolated = false;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

std::vector<const CorpusEntry*> corpus_select(const std::string& filter) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : corpus()) {
    if (filter.empty() || e.name.find(filter) != std::string::npos ||
        e.family.find(filter) != std::string::npos) {
      out.push_back(&e);
    }
  }
  return out;
}

}  // namespace mfcat
