#include "apu/rational.hpp"

namespace apu {

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::domain_error("Rational::from_string: zero denominator");
  return Rational(num, den);
}

std::string int_to_string(const Int& v) { return v.get_str(); }

Int int_from_string(const std::string& s) { return Int(s); }

}  // namespace apu
