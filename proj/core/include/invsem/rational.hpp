#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace invsem {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(std::int64_t num, std::int64_t den = 1) { return Rat(num, den); }

/// Renders as "p" for integers and "p/q" otherwise.
std::string rat_to_string(const Rat& r);

/// Parses "p", "-p", "p/q". Returns nullopt on malformed input or q == 0.
std::optional<Rat> parse_rat(const std::string& text);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace invsem
