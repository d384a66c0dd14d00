#pragma once

#include "preproj/quiver.hpp"

#include <initializer_list>
#include <string>

namespace preproj::words {

// a_i*...*a_j, empty when i > j.
inline std::string up(int i, int j) {
  std::string s;
  for (int k = i; k <= j; ++k) s += (s.empty() ? "" : "*") + arrow_name(k);
  return s;
}

// abar_j*...*abar_i, empty when j < i.
inline std::string down(int j, int i) {
  std::string s;
  for (int k = j; k >= i; --k) s += (s.empty() ? "" : "*") + bar_name(k);
  return s;
}

inline std::string cat(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts)
    if (!p.empty()) s += (s.empty() ? "" : "*") + p;
  return s;
}

inline std::string a(int i) { return arrow_name(i); }
inline std::string b(int i) { return bar_name(i); }

}  // namespace preproj::words
