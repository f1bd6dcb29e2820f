#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schur {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Group elements are uniform index vectors: permutation images for
// permutation groups, exponent vectors for polycyclic groups.
using Elt = std::vector<std::uint32_t>;

// Error taxonomy shared by the whole library.  `internal` means a broken
// invariant (a bug), the others are caller-facing conditions.
enum class ErrorKind { domain, parse, resource, internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_domain(const std::string& msg) {
  throw Error(ErrorKind::domain, msg);
}
[[noreturn]] inline void throw_parse(const std::string& msg) {
  throw Error(ErrorKind::parse, msg);
}
[[noreturn]] inline void throw_resource(const std::string& msg) {
  throw Error(ErrorKind::resource, msg);
}
[[noreturn]] inline void throw_internal(const std::string& msg) {
  throw Error(ErrorKind::internal, msg);
}

// Math-level invariant check.  Always on: a failure here is a bug, and the
// engine must never return silently wrong indices.
#define SCHUR_CHECK(cond, msg)                          \
  do {                                                  \
    if (!(cond)) ::schur::throw_internal(msg);          \
  } while (0)

inline void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = v.size();
    for (auto x : v) hash_mix(h, x);
    return h;
  }
};

// Deterministic xorshift-based generator.  Used only to pick splitting
// directions; results never depend on the values drawn, just the run path.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    s_ ^= s_ << 13;
    s_ ^= s_ >> 7;
    s_ ^= s_ << 17;
    return s_;
  }
  // Bounded draw; slight modulo bias is irrelevant here.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

 private:
  std::uint64_t s_;
};

}  // namespace schur
