#include <cctype>
#include <string>

#include "mfcat/errors.hpp"
#include "mfcat/ring.hpp"

namespace mfcat {

namespace {

// Recursive-descent parser for
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*      division only by nonzero constants
//   unary  := ('+'|'-') unary | power
//   power  := atom ('^' integer)?
//   atom   := number | identifier | '(' expr ')'
class Parser {
 public:
  Parser(const std::string& text, const RingCtx& ctx) : s_(text), ctx_(ctx) {}

  Series parse() {
    skip_space();
    if (pos_ == s_.size()) fail("empty expression");
    Series r = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Series expr() {
    Series r = term();
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  Series term() {
    Series r = unary();
    for (;;) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        Series d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        r = scalar_mul(residue_map(d).inverse(), r);
      } else {
        return r;
      }
    }
  }

  Series unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Series power() {
    Series base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      std::string digits = s_.substr(start, pos_ - start);
      if (digits.size() > 4) fail("exponent too large");
      unsigned k = static_cast<unsigned>(std::stoul(digits));
      if (k > kMaxExponent) fail("exponent too large");
      return base.pow(k);
    }
    return base;
  }

  Series atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Series r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Series::constant(ctx_, Scalar::parse(s_.substr(start, pos_ - start), ctx_.field()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_' || s_[pos_] == '\'')) {
        ++pos_;
      }
      std::string name = s_.substr(start, pos_ - start);
      auto idx = ctx_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Series::variable(ctx_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const RingCtx& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Series parse_series(const std::string& text, const RingCtx& ctx) {
  try {
    return Parser(text, ctx).parse();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace mfcat
