#include "mfcat/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "json.hpp"
#include "mfcat/errors.hpp"

namespace mfcat {

using nlohmann::json;

namespace {

std::string dump(const json& j, int indent) { return j.dump(indent); }

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

// Runs `f`, turning JSON access errors into ParseError.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("unexpected JSON layout: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

json ring_json(const RingCtx& r) {
  json j;
  j["variables"] = r.names();
  j["field"] = r.field().to_string();
  j["truncation"] = r.truncated() ? json(r.truncation()) : json(nullptr);
  return j;
}

RingCtx ring_of(const json& j) {
  if (j.is_string()) return RingCtx::parse(j.get<std::string>());
  auto names = j.at("variables").get<std::vector<std::string>>();
  FieldSpec f = j.contains("field") ? FieldSpec::parse(j.at("field").get<std::string>()) : FieldSpec();
  unsigned t = RingCtx::kNoTruncation;
  if (j.contains("truncation") && !j.at("truncation").is_null()) t = j.at("truncation").get<unsigned>();
  return RingCtx(std::move(names), f, t);
}

json series_json(const Series& s) {
  json arr = json::array();
  const std::size_t n = s.ctx().n_vars();
  for (const auto& [e, c] : s.terms()) {
    std::vector<unsigned> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = e[i];
    arr.push_back(json::array({ev, c.to_string()}));
  }
  return arr;
}

Series series_of(const json& j, const RingCtx& ctx) {
  if (j.is_string()) return parse_series(j.get<std::string>(), ctx);
  Series s(ctx);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw ParseError("series term must be [exponents, coeff]");
    auto ev = term[0].get<std::vector<unsigned>>();
    if (ev.size() != ctx.n_vars()) throw ParseError("exponent vector has the wrong length");
    Exponent e;
    for (std::size_t i = 0; i < ev.size(); ++i) e.set(i, ev[i]);
    const json& c = term[1];
    Scalar v = c.is_string() ? Scalar::parse(c.get<std::string>(), ctx.field())
                             : Scalar(c.get<long>(), ctx.field());
    s.add_term(e, v);
  }
  return s;
}

json matrix_json(const RMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(series_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RMatrix matrix_of(const json& j, const RingCtx& ctx, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw ParseError("matrix has the wrong number of rows");
  RMatrix m(ctx, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix row has the wrong length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = series_of(j[i][k], ctx);
  }
  return m;
}

json mf_json(const MatrixFactorization& x) {
  json j;
  j["ring"] = ring_json(x.ctx());
  j["potential"] = series_json(x.potential());
  j["rank"] = x.rank();
  j["phi"] = matrix_json(x.phi());
  j["psi"] = matrix_json(x.psi());
  return j;
}

MatrixFactorization mf_of(const json& j) {
  RingCtx r = ring_of(j.at("ring"));
  Series w = series_of(j.at("potential"), r);
  std::size_t n = j.at("rank").get<std::size_t>();
  return MatrixFactorization(w, matrix_of(j.at("phi"), r, n, n), matrix_of(j.at("psi"), r, n, n));
}

json dims_json(const Dims& d) { return json{{"even", d.even}, {"odd", d.odd}}; }

}  // namespace

std::string to_json(const RingCtx& r, int indent) { return dump(ring_json(r), indent); }
std::string to_json(const Series& s, int indent) { return dump(series_json(s), indent); }
std::string to_json(const MatrixFactorization& x, int indent) { return dump(mf_json(x), indent); }

std::string to_json(const MFMorphism& f, int indent) {
  json j;
  j["source"] = mf_json(f.source());
  j["target"] = mf_json(f.target());
  j["parity"] = f.parity();
  j["f0"] = matrix_json(f.f0());
  j["f1"] = matrix_json(f.f1());
  return dump(j, indent);
}

std::string to_json(const KoszulData& kd, int indent) {
  json j;
  j["potential"] = series_json(kd.potential);
  j["generators"] = json::array();
  j["witnesses"] = json::array();
  for (const auto& g : kd.generators) j["generators"].push_back(series_json(g));
  for (const auto& w : kd.witnesses) j["witnesses"].push_back(series_json(w));
  return dump(j, indent);
}

std::string to_json(const AInfStructure& m, int indent) {
  json j;
  j["field"] = m.field.to_string();
  j["basis"] = m.basis;
  j["parity"] = m.parity;
  j["max_arity"] = m.max_arity;
  json prods = json::array();
  // by arity, then lexicographic arguments
  std::vector<const std::pair<const std::vector<std::size_t>, std::vector<Scalar>>*> order;
  for (const auto& p : m.products) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->first.size() < b->first.size(); });
  for (const auto* p : order) {
    json v = json::array();
    for (const auto& s : p->second) v.push_back(s.to_string());
    prods.push_back(json{{"arity", p->first.size()}, {"args", p->first}, {"value", v}});
  }
  j["products"] = std::move(prods);
  return dump(j, indent);
}

std::string to_json(const HHReport& h, int indent) {
  json j;
  j["hh_even"] = h.cohomology.even;
  j["hh_odd"] = h.cohomology.odd;
  j["milnor"] = h.milnor;
  j["tyurina"] = h.tyurina;
  j["hh_homology_parity"] = h.homology_parity;
  j["hp"] = h.periodic.total();
  return dump(j, indent);
}

std::string to_json(const Dims& d, int indent) { return dump(dims_json(d), indent); }

RingCtx ring_from_json(const std::string& text) {
  json j = parse_text(text);
  return guarded([&] { return ring_of(j); });
}

Series series_from_json(const std::string& text, const RingCtx& ctx) {
  json j = parse_text(text);
  return guarded([&] { return series_of(j, ctx); });
}

MatrixFactorization mf_from_json(const std::string& text) {
  json j = parse_text(text);
  return guarded([&] { return mf_of(j); });
}

MFMorphism morphism_from_json(const std::string& text) {
  json j = parse_text(text);
  return guarded([&] {
    MatrixFactorization s = mf_of(j.at("source"));
    MatrixFactorization t = mf_of(j.at("target"));
    RMatrix f0 = matrix_of(j.at("f0"), s.ctx(), t.rank(), s.rank());
    RMatrix f1 = matrix_of(j.at("f1"), s.ctx(), t.rank(), s.rank());
    return MFMorphism(s, t, f0, f1, j.value("parity", 0));
  });
}

KoszulData koszul_from_json(const std::string& text, const RingCtx& ctx) {
  json j = parse_text(text);
  return guarded([&] {
    KoszulData kd;
    kd.potential = series_of(j.at("potential"), ctx);
    for (const auto& g : j.at("generators")) kd.generators.push_back(series_of(g, ctx));
    for (const auto& w : j.at("witnesses")) kd.witnesses.push_back(series_of(w, ctx));
    return kd;
  });
}

AInfStructure ainf_from_json(const std::string& text) {
  json j = parse_text(text);
  return guarded([&] {
    AInfStructure m;
    m.field = FieldSpec::parse(j.at("field").get<std::string>());
    m.basis = j.at("basis").get<std::vector<std::string>>();
    m.parity = j.at("parity").get<std::vector<unsigned>>();
    m.max_arity = j.at("max_arity").get<unsigned>();
    for (const auto& p : j.at("products")) {
      auto args = p.at("args").get<std::vector<std::size_t>>();
      std::vector<Scalar> v;
      for (const auto& s : p.at("value")) v.push_back(Scalar::parse(s.get<std::string>(), m.field));
      m.products.emplace(std::move(args), std::move(v));
    }
    return m;
  });
}

namespace {

// Identifiers in an expression, x/y/z-style names first by length then text.
std::vector<std::string> collect_variables(const std::string& expr) {
  std::set<std::string> found;
  for (std::size_t i = 0; i < expr.size();) {
    unsigned char c = static_cast<unsigned char>(expr[i]);
    if (std::isalpha(c) || c == '_') {
      std::size_t start = i;
      while (i < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[i])) || expr[i] == '_' ||
                                 expr[i] == '\'')) {
        ++i;
      }
      found.insert(expr.substr(start, i - start));
    } else {
      ++i;
    }
  }
  std::vector<std::string> names(found.begin(), found.end());
  std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  if (names.empty()) names.push_back("x");
  return names;
}

}  // namespace

namespace {

// Parses without truncation, then raises a finite truncation to at least
// twice the degree so that d^2 = w checks stay exact.
Series with_floor(const RingCtx& r, const std::function<Series(const RingCtx&)>& parse) {
  Series w = parse(r.with_truncation(RingCtx::kNoTruncation));
  if (!r.truncated()) return w;
  const unsigned floor = std::max(r.truncation(), 2 * w.degree());
  return w.recast(r.with_truncation(std::min(floor, kMaxExponent)));
}

}  // namespace

Series potential_from_text(const std::string& text, const std::string& ring_spec) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty potential");
  if (text[first] == '{') {
    json j = parse_text(text);
    return guarded([&] {
      RingCtx r = !ring_spec.empty()     ? RingCtx::parse(ring_spec)
                  : j.contains("ring")   ? ring_of(j.at("ring"))
                  : j.at("potential").is_string()
                      ? RingCtx(collect_variables(j.at("potential").get<std::string>()))
                      : throw ParseError("a series given as terms needs a ring");
      return with_floor(r, [&](const RingCtx& c) { return series_of(j.at("potential"), c); });
    });
  }
  std::string expr = text.substr(first);
  while (!expr.empty() && std::isspace(static_cast<unsigned char>(expr.back()))) expr.pop_back();
  RingCtx r = ring_spec.empty() ? RingCtx(collect_variables(expr)) : RingCtx::parse(ring_spec);
  return with_floor(r, [&](const RingCtx& c) { return parse_series(expr, c); });
}

}  // namespace mfcat
