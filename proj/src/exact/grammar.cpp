#include "nct/exact/grammar.hpp"

#include "nct/error.hpp"

#include <cctype>

namespace nct {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
  return std::string(s.substr(b, e - b));
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

}  // namespace

std::vector<std::string> split(std::string_view text, char delimiter) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(delimiter, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

QuadInt parse_quad(std::string_view raw) {
  const std::string text = trim(raw);
  try {
    if (starts_with(text, "quad:")) {
      const auto parts = split(std::string_view(text).substr(5), ',');
      if (parts.size() != 4) throw ParseError("quad grammar needs four integers: quad:a,b,c,D");
      const Integer c = parse_integer(parts[2]);
      const Integer d = parse_integer(parts[3]);
      if (c == 0) throw ParseError("quad grammar: c must be nonzero");
      if (d <= 0) throw ParseError("quad grammar: D must be positive");
      return QuadInt(parse_integer(parts[0]), parse_integer(parts[1]), c, d);
    }
    if (starts_with(text, "sqrt:")) {
      const Integer d = parse_integer(text.substr(5));
      if (d <= 0) throw ParseError("sqrt grammar: D must be positive");
      return QuadInt::sqrt(d);
    }
    if (starts_with(text, "int:")) return QuadInt(parse_integer(text.substr(4)));
    return QuadInt(parse_integer(text));
  } catch (const ParseError& e) {
    throw ParseError("cannot parse quadratic number '" + text + "': " + e.what());
  }
}

Interval parse_real(std::string_view raw, mpfr_prec_t precision) {
  const std::string text = trim(raw);
  if (starts_with(text, "rat:")) {
    const auto parts = split(std::string_view(text).substr(4), '/');
    if (parts.size() > 2) throw ParseError("rat grammar is rat:p/q");
    const Integer num = parse_integer(parts[0]);
    const Integer den = parts.size() == 2 ? parse_integer(parts[1]) : Integer(1);
    if (den == 0) throw ParseError("rat grammar: zero denominator");
    return Interval(make_rational(num, den), precision);
  }
  if (starts_with(text, "root:")) {
    const auto parts = split(std::string_view(text).substr(5), ':');
    if (parts.size() != 2) throw ParseError("root grammar is root:m:k");
    const Integer m = parse_integer(parts[0]);
    const Integer k = parse_integer(parts[1]);
    if (m < 0 || k < 1 || !k.fits_ulong_p()) throw ParseError("root grammar needs m >= 0 and k >= 1");
    return root(Interval(m, precision), k.get_ui());
  }
  return parse_quad(text).enclose(precision);
}

std::vector<Interval> parse_real_list(std::string_view text, mpfr_prec_t precision) {
  std::vector<Interval> out;
  for (const auto& item : split(text, ';')) out.push_back(parse_real(item, precision));
  return out;
}

}  // namespace nct
