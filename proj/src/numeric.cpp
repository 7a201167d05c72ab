#include "srl/numeric.hpp"

#include <cctype>

#include "srl/errors.hpp"

namespace srl {

Rat parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw argument_error("bad rational lexeme '" + std::string(text) + "'");
    return Rat(Int(std::string(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw argument_error("bad rational lexeme '" + std::string(text) + "'");
  Int d{std::string(den)};
  if (d == 0) throw argument_error("zero denominator in '" + std::string(text) + "'");
  return Rat(Int(std::string(num)), d);
}

std::string format_rational(const Rat& q) {
  const Int num = numerator(q);
  const Int den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_int(const Int& v) { return v.str(); }

}  // namespace srl
