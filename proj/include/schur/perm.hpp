#pragma once

// Permutations of {0, ..., n-1} as image vectors, plus the 1-based cycle
// notation used in input files and logs.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "schur/common.hpp"
#include "schur/numtheory.hpp"

namespace schur {

inline Elt perm_identity(u64 degree) {
  Elt p(degree);
  for (u64 i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

// Product "a then b": (a*b)(i) = b(a(i)).
inline Elt perm_mul(const Elt& a, const Elt& b) {
  Elt r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Elt perm_inverse(const Elt& a) {
  Elt r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline bool perm_is_identity(const Elt& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

// Parse "(1,2,3)(4,5)" with 1-based points; "()" is the identity.
inline Elt parse_permutation(const std::string& s, u64 degree) {
  Elt p = perm_identity(degree);
  std::vector<bool> seen(degree, false);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw_parse("permutation '" + s + "' at position " + std::to_string(i) +
                ": " + why);
  };
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i >= s.size()) fail("empty permutation");
  while (i < s.size()) {
    if (s[i] != '(') fail("expected '('");
    ++i;
    skip_ws();
    std::vector<u64> cycle;
    while (i < s.size() && s[i] != ')') {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) fail("expected a point");
      u64 pt = std::stoull(s.substr(i, j - i));
      i = j;
      if (pt < 1 || pt > degree) fail("point out of range");
      if (seen[pt - 1]) fail("point repeated");
      seen[pt - 1] = true;
      cycle.push_back(pt - 1);
      skip_ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        skip_ws();
      } else if (i < s.size() && s[i] != ')') {
        fail("expected ',' or ')'");
      }
    }
    if (i >= s.size()) fail("unclosed cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[cycle[k]] = static_cast<std::uint32_t>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  return p;
}

inline std::string format_permutation(const Elt& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    any = true;
    os << '(' << (i + 1);
    seen[i] = true;
    for (std::size_t j = p[i]; j != i; j = p[j]) {
      os << ',' << (j + 1);
      seen[j] = true;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

}  // namespace schur
