#ifndef MFCAT_ACCEPTANCE_HPP
#define MFCAT_ACCEPTANCE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mfcat/corpus.hpp"
#include "mfcat/stabilize.hpp"

namespace mfcat {

struct AcceptanceOptions {
  std::string filter;              // corpus subset, see corpus_select
  unsigned random_inputs = 200;    // randomized inputs for criterion 1
  std::uint32_t seed = 20240617;
  unsigned max_arity = 6;
  // Replaces the bundled corpus when set.
  const std::vector<CorpusEntry>* entries = nullptr;
};

struct CheckResult {
  int id = 0;
  std::string title;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool passed() const noexcept { return failures.empty() && cases > 0; }
};

// Number of acceptance criteria.
inline constexpr int kCriteria = 13;

CheckResult run_criterion(int id, const AcceptanceOptions& opts = {});
std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opts = {});

// Random Koszul data over k[x_1..x_n]: f_i = x_i^{a_i} + g_i(x_{i+1}..x_n)
// with g_i in m^2 (a regular sequence) and witnesses in m, so w lies in m^2.
KoszulData random_koszul_data(std::mt19937& rng, std::size_t n_vars);

}  // namespace mfcat

#endif  // MFCAT_ACCEPTANCE_HPP
