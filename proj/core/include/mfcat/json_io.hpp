#ifndef MFCAT_JSON_IO_HPP
#define MFCAT_JSON_IO_HPP

#include <string>

#include "mfcat/ainfinity.hpp"
#include "mfcat/hochschild.hpp"
#include "mfcat/mf.hpp"
#include "mfcat/stabilize.hpp"

namespace mfcat {

// Canonical JSON text: object keys sorted, no insignificant whitespace
// unless `indent` >= 0. Every reader throws ParseError on malformed input.
//
//   ring:   {"field": "rational", "truncation": null | N, "variables": [...]}
//   series: [[[e_1, ..., e_n], "coeff"], ...] in graded-lex order
//   mf:     {"phi": [[series]], "potential": series, "psi": [[series]],
//            "rank": r, "ring": ring}

std::string to_json(const RingCtx& r, int indent = -1);
std::string to_json(const Series& s, int indent = -1);
std::string to_json(const MatrixFactorization& x, int indent = -1);
std::string to_json(const MFMorphism& f, int indent = -1);
std::string to_json(const KoszulData& kd, int indent = -1);
std::string to_json(const AInfStructure& m, int indent = -1);
std::string to_json(const HHReport& h, int indent = -1);
std::string to_json(const Dims& d, int indent = -1);

RingCtx ring_from_json(const std::string& text);
Series series_from_json(const std::string& text, const RingCtx& ctx);
MatrixFactorization mf_from_json(const std::string& text);
MFMorphism morphism_from_json(const std::string& text);
KoszulData koszul_from_json(const std::string& text, const RingCtx& ctx);
AInfStructure ainf_from_json(const std::string& text);

// A potential given either as an expression or as a JSON object
// {"ring": ring | "x,y;rational", "potential": series | "expr"}.
// Without a ring, variables are collected from the expression.
Series potential_from_text(const std::string& text, const std::string& ring_spec = "");

}  // namespace mfcat

#endif  // MFCAT_JSON_IO_HPP
