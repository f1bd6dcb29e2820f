#pragma once

// Polycyclic presentations and collection.
//
// A presentation on generators g_0, ..., g_{n-1} consists of relative orders
// o_i >= 2, power relations g_i^{o_i} = (word in g_{i+1}, ...), and
// conjugation relations g_j^{g_i} = (word in g_{i+1}, ...) for i < j.
// Elements are exponent vectors e with 0 <= e_i < o_i; products are brought
// to this normal form by collection from the left.

#include <cstdint>
#include <vector>

#include "schur/common.hpp"
#include "schur/numtheory.hpp"

namespace schur {

struct PcRep {
  std::vector<std::uint32_t> relord;
  std::vector<Elt> power_tail;          // power_tail[i]: empty means identity
  std::vector<std::vector<Elt>> conj;   // conj[i][j] for i < j: empty means g_j

  std::size_t ngens() const { return relord.size(); }

  void validate() const {
    std::size_t n = relord.size();
    if (power_tail.size() != n || conj.size() != n)
      throw_domain("polycyclic presentation: relation tables mismatch");
    u64 size = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (relord[i] < 2)
        throw_domain("polycyclic presentation: relative order below 2");
      if (size > (u64(1) << 62) / relord[i])
        throw_resource("polycyclic presentation: order overflow");
      size *= relord[i];
    }
    auto check_word = [&](const Elt& w, std::size_t above) {
      if (w.empty()) return;
      if (w.size() != n)
        throw_domain("polycyclic presentation: word length mismatch");
      for (std::size_t t = 0; t < n; ++t) {
        if (w[t] >= relord[t])
          throw_domain("polycyclic presentation: exponent out of range");
        if (t <= above && w[t] != 0)
          throw_domain(
              "polycyclic presentation: relation word uses early generators");
      }
    };
    for (std::size_t i = 0; i < n; ++i) {
      check_word(power_tail[i], i);
      if (conj[i].size() != n)
        throw_domain("polycyclic presentation: conjugate table mismatch");
      for (std::size_t j = i + 1; j < n; ++j) check_word(conj[i][j], i);
    }
  }

  u64 presented_order() const {
    u64 size = 1;
    for (auto o : relord) size *= o;
    return size;
  }
};

class PcOps {
 public:
  explicit PcOps(const PcRep& rep) : rep_(&rep) {}

  Elt identity() const { return Elt(rep_->ngens(), 0); }

  Elt mul(Elt a, const Elt& b) const {
    u64 budget = kStepBudget;
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::uint32_t t = 0; t < b[j]; ++t)
        a = mul_gen(std::move(a), j, budget);
    return a;
  }

  // Mixed-radix bijection between exponent vectors and [0, |G|).
  u64 index_of(const Elt& e) const {
    u64 idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      idx = idx * rep_->relord[i] + e[i];
    return idx;
  }
  Elt element_at(u64 idx) const {
    std::size_t n = rep_->ngens();
    Elt e(n);
    for (std::size_t i = n; i-- > 0;) {
      e[i] = static_cast<std::uint32_t>(idx % rep_->relord[i]);
      idx /= rep_->relord[i];
    }
    return e;
  }

 private:
  static constexpr u64 kStepBudget = 50000000;
  const PcRep* rep_;

  Elt mul_gen(Elt a, std::size_t j, u64& budget) const {
    if (budget-- == 0) throw_resource("collection did not terminate");
    std::size_t n = a.size();
    bool has_suffix = false;
    for (std::size_t k = j + 1; k < n && !has_suffix; ++k)
      if (a[k] != 0) has_suffix = true;
    if (!has_suffix) {
      if (++a[j] == rep_->relord[j]) {
        a[j] = 0;
        const Elt& tail = rep_->power_tail[j];
        if (!tail.empty())
          for (std::size_t k = j + 1; k < n; ++k)
            for (std::uint32_t t = 0; t < tail[k]; ++t)
              a = mul_gen(std::move(a), k, budget);
      }
      return a;
    }
    // a = pre * suf with pre using generators <= j:
    // a*g_j = (pre*g_j) * (suf conjugated by g_j)
    Elt suf(n, 0);
    for (std::size_t k = j + 1; k < n; ++k) {
      suf[k] = a[k];
      a[k] = 0;
    }
    a = mul_gen(std::move(a), j, budget);
    for (std::size_t k = j + 1; k < n; ++k) {
      if (suf[k] == 0) continue;
      const Elt& w = rep_->conj[j][k];
      for (std::uint32_t t = 0; t < suf[k]; ++t) {
        if (w.empty()) {
          a = mul_gen(std::move(a), k, budget);
        } else {
          for (std::size_t m = j + 1; m < n; ++m)
            for (std::uint32_t s = 0; s < w[m]; ++s)
              a = mul_gen(std::move(a), m, budget);
        }
      }
    }
    return a;
  }
};

}  // namespace schur
