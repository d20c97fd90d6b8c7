// mfcat: command-line front end for the matrix factorization library.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mfcat/acceptance.hpp"
#include "mfcat/corpus.hpp"
#include "mfcat/errors.hpp"
#include "mfcat/json_io.hpp"

using namespace mfcat;
using json = nlohmann::json;

namespace {

struct Options {
  std::string potential_file;
  std::string inline_expr;
  std::string ring;
  bool json_out = false;
  bool table_out = false;
  unsigned max_arity = 3;
  std::string filter;
  std::string mf_file;
  std::string other_file;
  std::string morphism_file;
  unsigned random_inputs = 200;
  int only = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Series read_potential(const Options& o) {
  if (!o.inline_expr.empty()) return potential_from_text(o.inline_expr, o.ring);
  if (!o.potential_file.empty()) return potential_from_text(slurp(o.potential_file), o.ring);
  throw PreconditionError("no potential given (use --potential FILE or --inline EXPR)");
}

MatrixFactorization read_mf(const std::string& path, const char* flag) {
  if (path.empty()) throw PreconditionError(std::string("missing ") + flag);
  return mf_from_json(slurp(path));
}

void emit(const std::string& text) { std::cout << text << '\n'; }

// First entry where phi*psi or psi*phi differs from w * id.
json verify_report(const MatrixFactorization& x) {
  json r;
  r["potential"] = x.potential().to_string();
  r["rank"] = x.rank();
  const RMatrix target = RMatrix::scalar(x.potential(), x.rank());
  const std::pair<const char*, RMatrix> products[] = {{"phi*psi", x.phi() * x.psi()},
                                                      {"psi*phi", x.psi() * x.phi()}};
  for (const auto& [name, p] : products) {
    for (std::size_t i = 0; i < x.rank(); ++i) {
      for (std::size_t j = 0; j < x.rank(); ++j) {
        if (p(i, j) == target(i, j)) continue;
        r["ok"] = false;
        r["failure"] = {{"product", name},
                        {"row", i},
                        {"col", j},
                        {"expected", target(i, j).to_string()},
                        {"found", p(i, j).to_string()}};
        return r;
      }
    }
  }
  r["ok"] = true;
  return r;
}

int cmd_verify(const Options& o) {
  const std::string path = o.mf_file.empty() ? o.potential_file : o.mf_file;
  MatrixFactorization x = read_mf(path, "MF file");
  json r = verify_report(x);
  if (o.json_out) {
    emit(r.dump());
  } else {
    std::cout << "w    = " << r["potential"].get<std::string>() << '\n'
              << "rank = " << x.rank() << '\n';
    if (r["ok"].get<bool>()) {
      std::cout << "OK\n";
    } else {
      const json& f = r["failure"];
      std::cout << "FAIL: " << f["product"].get<std::string>() << " entry (" << f["row"].get<std::size_t>()
                << "," << f["col"].get<std::size_t>() << ") is " << f["found"].get<std::string>()
                << ", expected " << f["expected"].get<std::string>() << '\n';
    }
  }
  return r["ok"].get<bool>() ? 0 : static_cast<int>(ExitCode::kVerification);
}

int cmd_hh(const Options& o) {
  HHReport h = hh_report(read_potential(o));
  if (o.table_out) {
    std::cout << "HH^*   " << h.cohomology.to_string() << '\n'
              << "HH_*   " << h.homology.to_string() << '\n'
              << "milnor " << h.milnor << '\n'
              << "tyurina " << h.tyurina << '\n';
  } else {
    emit(to_json(h));
  }
  return 0;
}

int cmd_minimal_model(const Options& o) {
  AInfStructure m = transfer_minimal_model(read_potential(o), o.max_arity);
  if (!o.table_out) {
    emit(to_json(m));
    return 0;
  }
  std::cout << "basis:";
  for (const auto& b : m.basis) std::cout << ' ' << b;
  std::cout << '\n';
  for (const auto& [args, value] : m.products) {
    std::cout << 'm' << args.size() << '(';
    for (std::size_t i = 0; i < args.size(); ++i) std::cout << (i ? "," : "") << m.basis[args[i]];
    std::cout << ") =";
    bool first = true;
    for (std::size_t k = 0; k < value.size(); ++k) {
      if (value[k].is_zero()) continue;
      std::cout << (first ? " " : " + ") << value[k].to_string() << '*' << m.basis[k];
      first = false;
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_quasi_iso(const Options& o) {
  if (o.morphism_file.empty()) throw PreconditionError("missing --morphism FILE");
  MFMorphism f = morphism_from_json(slurp(o.morphism_file));
  if (!f.is_closed()) throw PreconditionError("morphism is not closed");
  const bool q = is_quasi_iso(f);
  if (o.table_out) {
    std::cout << (q ? "quasi-isomorphism\n" : "not a quasi-isomorphism\n");
  } else {
    emit(json{{"quasi_iso", q}}.dump());
  }
  return 0;
}

// H(k (x) X), or the cohomology over R of Hom(X, Y) when --with is given.
int cmd_cohomology(const Options& o) {
  MatrixFactorization x = o.mf_file.empty() ? stabilize_residue_field(read_potential(o))
                                            : read_mf(o.mf_file, "--mf FILE");
  Dims d = o.other_file.empty() ? cohomology_mod_k(x)
                                : cohomology_over_R(hom_complex(x, read_mf(o.other_file, "--with FILE")));
  if (o.table_out) {
    std::cout << d.to_string() << '\n';
  } else {
    emit(to_json(d));
  }
  return 0;
}

int cmd_transform(const Options& o) {
  MatrixFactorization x = read_mf(o.mf_file, "--mf FILE");
  MatrixFactorization kernel =
      o.other_file.empty() ? stabilized_diagonal(x.potential()) : read_mf(o.other_file, "--kernel FILE");
  TransformResult t = integral_transform(x, kernel);
  Dims d = transform_cohomology(t);
  if (o.table_out) {
    std::cout << "rank " << t.mf.rank() << ", w = " << t.mf.potential().to_string() << ", H(k (x) -) "
              << d.to_string() << '\n';
    return 0;
  }
  json r;
  r["mf"] = json::parse(to_json(t.mf));
  r["source_vars"] = t.source_vars;
  r["cohomology"] = json::parse(to_json(d));
  emit(r.dump());
  return 0;
}

int cmd_corpus_run(const Options& o) {
  AcceptanceOptions opts;
  opts.filter = o.filter;
  opts.random_inputs = o.random_inputs;
  bool all = true;
  json out = json::array();
  for (int id = 1; id <= kCriteria; ++id) {
    if (o.only != 0 && id != o.only) continue;
    CheckResult r = run_criterion(id, opts);
    // a filter can leave a criterion without applicable entries
    const bool skipped = r.cases == 0 && !o.filter.empty();
    all = all && (r.passed() || skipped);
    if (o.json_out) {
      out.push_back({{"criterion", r.id},
                     {"title", r.title},
                     {"cases", r.cases},
                     {"passed", r.passed()},
                     {"failures", r.failures}});
      continue;
    }
    std::cout << std::setw(2) << r.id << "  " << std::left << std::setw(36) << r.title << std::right
              << std::setw(5) << r.cases << "  " << (skipped ? "SKIP" : r.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& f : r.failures) std::cout << "      " << f << '\n';
  }
  if (o.json_out) emit(out.dump());
  return all ? 0 : static_cast<int>(ExitCode::kVerification);
}

void add_potential_flags(CLI::App* sub, Options& o) {
  auto* file = sub->add_option("--potential", o.potential_file, "Potential as an expression or JSON file");
  auto* inl = sub->add_option("--inline", o.inline_expr, "Potential given inline, e.g. \"x^2*y + y^3\"");
  file->excludes(inl);
  sub->add_option("--ring", o.ring, "Ring, e.g. \"x,y;rational;trunc=32\"");
}

void add_format_flags(CLI::App* sub, Options& o) {
  auto* j = sub->add_flag("--json", o.json_out, "JSON output");
  auto* t = sub->add_flag("--table", o.table_out, "Human-readable output");
  j->excludes(t);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix factorizations, A-infinity minimal models and Hochschild invariants"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* verify = app.add_subcommand("verify", "Check phi*psi = psi*phi = w*id for an MF file");
  verify->add_option("file", o.mf_file, "MF JSON file");
  verify->add_option("--potential", o.potential_file, "Alias for the MF file");
  add_format_flags(verify, o);
  verify->callback([&] { action = [&] { return cmd_verify(o); }; });

  auto* stab = app.add_subcommand("stabilize", "Stabilization of the residue field");
  add_potential_flags(stab, o);
  add_format_flags(stab, o);
  stab->callback([&] {
    action = [&] {
      emit(to_json(stabilize_residue_field(read_potential(o)), o.table_out ? 2 : -1));
      return 0;
    };
  });

  auto* diag = app.add_subcommand("diagonal", "Stabilized diagonal over R (x) R");
  add_potential_flags(diag, o);
  add_format_flags(diag, o);
  diag->callback([&] {
    action = [&] {
      emit(to_json(stabilized_diagonal(read_potential(o)), o.table_out ? 2 : -1));
      return 0;
    };
  });

  auto* hh = app.add_subcommand("hh", "Hochschild cohomology and homology");
  add_potential_flags(hh, o);
  add_format_flags(hh, o);
  hh->callback([&] { action = [&] { return cmd_hh(o); }; });

  auto* mm = app.add_subcommand("minimal-model", "Transferred A-infinity structure on End(k^stab)");
  add_potential_flags(mm, o);
  add_format_flags(mm, o);
  mm->add_option("--max-arity", o.max_arity, "Highest m_k to compute")->check(CLI::Range(2, 8));
  mm->callback([&] { action = [&] { return cmd_minimal_model(o); }; });

  auto* qi = app.add_subcommand("quasi-iso", "Test whether a closed morphism is a quasi-isomorphism");
  qi->add_option("--morphism", o.morphism_file, "Morphism JSON file")->required();
  add_format_flags(qi, o);
  qi->callback([&] { action = [&] { return cmd_quasi_iso(o); }; });

  auto* coh = app.add_subcommand("cohomology", "H(k (x) X), or H(Hom(X, Y)) over R with --with");
  add_potential_flags(coh, o);
  coh->add_option("--mf", o.mf_file, "MF JSON file (default: k^stab of the potential)");
  coh->add_option("--with", o.other_file, "Second MF file Y");
  add_format_flags(coh, o);
  coh->callback([&] { action = [&] { return cmd_cohomology(o); }; });

  auto* tr = app.add_subcommand("transform", "Integral transform X (x)_R T");
  tr->add_option("--mf", o.mf_file, "MF JSON file X")->required();
  tr->add_option("--kernel", o.other_file, "Kernel MF file (default: stabilized diagonal)");
  add_format_flags(tr, o);
  tr->callback([&] { action = [&] { return cmd_transform(o); }; });

  auto* run = app.add_subcommand("corpus-run", "Run the acceptance checks on the bundled corpus");
  run->add_option("--filter", o.filter, "Restrict to entries whose name or family contains NAME");
  run->add_option("--random", o.random_inputs, "Randomized inputs for the soundness check");
  run->add_option("--only", o.only, "Run a single criterion")->check(CLI::Range(1, kCriteria));
  add_format_flags(run, o);
  run->callback([&] { action = [&] { return cmd_corpus_run(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::kParse);
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "mfcat: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "mfcat: " << e.what() << '\n';
    return 1;
  }
}
