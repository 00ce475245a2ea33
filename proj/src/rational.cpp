#include "vrb/rational.hpp"

#include <sstream>

namespace vrb {

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return ParseError("invalid rational '" + text + "'"); };
  std::string num = text;
  std::string den = "1";
  if (auto pos = text.find('/'); pos != std::string::npos) {
    num = text.substr(0, pos);
    den = text.substr(pos + 1);
  }
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) throw bad();
  Integer n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer num = numerator(r);
  Integer den = denominator(r);
  Integer sn = sqrt(num);
  Integer sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer out = 1;
  for (unsigned i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return Rational(out);
}

}  // namespace vrb
