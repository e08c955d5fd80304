#include "pds/literal.hpp"

#include <cctype>

#include "pds/error.hpp"

namespace pds {
namespace {

class Parser {
 public:
  Parser(std::string_view text, int L) : s_(text), L_(L) {}

  CycloNumber parse() {
    CycloNumber v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  std::string_view s_;
  int L_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cyclotomic literal '" + std::string(s_) + "': " + msg, 1, static_cast<int>(pos_) + 1);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out.push_back(s_[pos_++]);
    return out;
  }

  CycloNumber expr() {
    CycloNumber v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }
  CycloNumber term() {
    CycloNumber v = factor();
    while (accept('*')) v *= factor();
    return v;
  }
  CycloNumber factor() {
    skip();
    if (accept('-')) return -factor();
    if (accept('(')) {
      CycloNumber v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (s_.substr(pos_, 4) == "zeta") {
      pos_ += 4;
      long k = 1;
      if (accept('^')) {
        bool neg = accept('-');
        std::string d = digits();
        if (d.empty()) fail("expected exponent");
        k = std::stol(d) * (neg ? -1 : 1);
      }
      return root_of_unity(L_, k);
    }
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      if (L_ % 4 != 0) fail("'i' requires the declared order to be a multiple of 4");
      return root_of_unity(L_, L_ / 4);
    }
    std::string num = digits();
    if (num.empty()) fail("expected a number, 'zeta', 'i' or '('");
    Integer d = 1;
    if (accept('/')) {
      std::string den = digits();
      if (den.empty()) fail("expected denominator");
      d = Integer(den);
      if (d == 0) fail("zero denominator");
    }
    Rational r(Integer(num), d);
    r.canonicalize();
    return CycloNumber(r);
  }
};

}  // namespace

CycloNumber parse_cyclo(std::string_view text, int L) {
  if (L < 1) throw InvalidArgument("literal order must be positive");
  return Parser(text, L).parse();
}

std::string format_cyclo(const CycloNumber& x, int L) {
  CycloNumber y = x.lifted(L);
  std::string out;
  for (std::size_t k = 0; k < y.degree(); ++k) {
    Rational c = y.coeff(k);
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    if (k == 0) {
      out += to_string(a);
      continue;
    }
    if (a != 1) out += to_string(a) + "*";
    out += "zeta";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace pds
