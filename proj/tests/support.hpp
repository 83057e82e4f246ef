#pragma once

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "wtaut/partition.hpp"
#include "wtaut/poly.hpp"

namespace doctest {

template <>
struct StringMaker<wtaut::MultiPoly> {
  static String convert(const wtaut::MultiPoly& p) { return wtaut::to_string(p).c_str(); }
};

template <>
struct StringMaker<wtaut::Rational> {
  static String convert(const wtaut::Rational& q) { return wtaut::to_string(q).c_str(); }
};

template <>
struct StringMaker<wtaut::Partition> {
  static String convert(const wtaut::Partition& p) { return p.str().c_str(); }
};

template <typename T>
struct StringMaker<std::vector<T>> {
  static String convert(const std::vector<T>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << StringMaker<T>::convert(v[i]).c_str();
    os << ']';
    return os.str().c_str();
  }
};

}  // namespace doctest

namespace wtaut::testing {

inline MultiPoly P(const std::string& s) { return parse_poly(s); }

/// Message of the E thrown by f, or "<no throw>".
template <typename E, typename F>
std::string thrown_message(F&& f) {
  try {
    f();
  } catch (const E& e) {
    return e.what();
  }
  return "<no throw>";
}

inline bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace wtaut::testing
