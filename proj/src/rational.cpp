#include "codp/rational.hpp"

#include <sstream>

#include "codp/errors.hpp"

namespace codp {

std::string rat_to_string(const Rat& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

Rat rat_from_string(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> BigInt {
    if (s.empty()) throw ParseError("empty integer in rational '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError("bad integer in rational '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw ParseError("bad integer in rational '" + text + "'");
    return BigInt(s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in rational '" + text + "'");
  return Rat(num, den);
}

}  // namespace codp
