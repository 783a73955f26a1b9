#include "invsem/rational.hpp"

#include <cctype>

namespace invsem {

std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

std::optional<Rat> parse_rat(const std::string& text) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) return std::nullopt;
      return Rat(Int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    return Rat(Int(num), d);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace invsem
