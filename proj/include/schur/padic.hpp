#pragma once

// The decomposition group of a rational prime p in Q(zeta_N)/Q, realized as
// an explicit subgroup of (Z/N)^*.  Write N = p^k * m with p not dividing m.
// The classes acting trivially on the p-regular roots (everything congruent
// to 1 mod m) form the inertia part, isomorphic to the units mod p^k; on top
// of that sits the Frobenius class, trivial on the p-power roots and raising
// zeta_m to the p-th power.  Stabilizers inside this subgroup answer the
// local questions: the degree of Q_p(values)/Q_p and how many places of an
// abelian number field lie above p.

#include <algorithm>
#include <vector>

#include "schur/common.hpp"
#include "schur/cyclo.hpp"
#include "schur/numtheory.hpp"

namespace schur {

struct PAdicGaloisGroup {
  u64 p = 2;
  u64 modulus = 1;   // ambient N
  u64 ppart = 1;     // p^k
  u64 pregular = 1;  // m = N / p^k
  u64 frobenius = 1;
  std::vector<u64> elements;  // sorted residues mod N
  std::vector<u64> gens;

  u64 order() const { return elements.size(); }
  bool contains(u64 u) const {
    if (modulus <= 1) return true;
    return std::binary_search(elements.begin(), elements.end(), u % modulus);
  }
};

inline PAdicGaloisGroup padic_galois(u64 p, u64 N) {
  if (!is_prime(p)) throw_domain("padic_galois: p must be prime");
  if (N == 0) throw_domain("padic_galois: modulus must be positive");
  PAdicGaloisGroup G;
  G.p = p;
  G.modulus = N;
  if (N == 1) {
    G.elements = {1};
    return G;
  }
  G.ppart = p_part(N, p);
  G.pregular = N / G.ppart;
  u64 m = G.pregular;
  u64 f = (m == 1) ? 1 : multiplicative_order(p % m, m);
  G.frobenius = (m == 1) ? 1 : crt(1, G.ppart, p % m, m);
  G.elements.reserve(euler_phi(G.ppart) * f);
  for (u64 u : units_mod(G.ppart)) {
    u64 q = 1;  // runs through the powers of p mod m
    for (u64 j = 0; j < f; ++j) {
      G.elements.push_back(crt(u, G.ppart, q, m));
      q = (m == 1) ? 1 : mulmod(q, p % m, m);
    }
  }
  std::sort(G.elements.begin(), G.elements.end());
  SCHUR_CHECK(std::adjacent_find(G.elements.begin(), G.elements.end()) ==
                  G.elements.end(),
              "decomposition group enumeration collided");
  SCHUR_CHECK(G.elements.size() == euler_phi(G.ppart) * f,
              "decomposition group has the wrong order");
  G.gens = small_generating_set_mod(N, G.elements);
  return G;
}

// Subgroup of the decomposition group fixing every value; the values must
// live in Q(zeta_N) for the group's modulus N.
inline std::vector<u64> local_stabilizer(const PAdicGaloisGroup& G,
                                         const std::vector<Cyclo>& values) {
  for (const auto& v : values)
    if (G.modulus % v.conductor() != 0)
      throw_domain(
          "local_stabilizer: value conductor does not divide the modulus");
  std::vector<u64> out;
  for (u64 u : G.elements) {
    bool fixes = true;
    for (const auto& v : values) {
      if (v.conductor() == 1) continue;
      if (v.galois(u % v.conductor()) != v) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.push_back(u);
  }
  return out;
}

// Degree of the local field extension Q_p(base, ext) / Q_p(base), as an
// index of stabilizers in the decomposition group.
inline u64 local_degree(const PAdicGaloisGroup& G,
                        const std::vector<Cyclo>& base,
                        const std::vector<Cyclo>& ext) {
  auto stab_base = local_stabilizer(G, base);
  std::vector<Cyclo> both = base;
  both.insert(both.end(), ext.begin(), ext.end());
  auto stab_both = local_stabilizer(G, both);
  SCHUR_CHECK(!stab_both.empty() &&
                  stab_base.size() % stab_both.size() == 0,
              "stabilizer tower must have integral index");
  return stab_base.size() / stab_both.size();
}

// Number of places above p of the fixed field of H: the index of the joint
// subgroup generated by H and the decomposition group in all of (Z/N)^*.
inline u64 num_places_over_p(const FieldSubgroup& H, u64 p) {
  u64 N = H.modulus;
  if (N <= 2) {
    if (!is_prime(p)) throw_domain("num_places_over_p: p must be prime");
    return 1;
  }
  PAdicGaloisGroup D = padic_galois(p, N);
  std::vector<u64> seed = H.elements;
  seed.insert(seed.end(), D.elements.begin(), D.elements.end());
  u64 joint = closure_mod(N, std::move(seed)).size();
  u64 full = euler_phi(N);
  SCHUR_CHECK(full % joint == 0, "joint subgroup order must divide phi(N)");
  return full / joint;
}

}  // namespace schur
