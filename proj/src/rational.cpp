#include "pds/rational.hpp"

#include <cctype>

#include "pds/error.hpp"

namespace pds {

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out.push_back(text[i++]);
    return i > start;
  };
  std::string num;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    if (text[i] == '-') num.push_back('-');
    ++i;
  }
  if (!digits(num)) throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den.clear();
    if (!digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (i != text.size()) throw ParseError("trailing characters in rational '" + std::string(text) + "'");
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace pds
