#include "schur/constructions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "schur/chartab.hpp"

using namespace schur;

namespace {

std::multiset<u64> degree_multiset(const Group& g) {
  CharacterTable t = CharacterTable::compute(g);
  auto d = t.degrees();
  return {d.begin(), d.end()};
}

u64 count_involutions(const Group& g) {
  u64 n = 0;
  for (std::uint32_t i = 0; i < g.order(); ++i)
    if (g.element_order(i) == 2) ++n;
  return n;
}

}  // namespace

TEST(Constructions, CyclicGroups) {
  for (u64 n = 1; n <= 30; ++n) {
    Group g = cyclic_group(n);
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(g.exponent(), n);
    EXPECT_TRUE(g.is_abelian());
    EXPECT_EQ(g.classes().rep.size(), n);
  }
}

TEST(Constructions, AbelianGroups) {
  Group g = abelian_group({2, 4, 8});
  EXPECT_EQ(g.order(), 64u);
  EXPECT_EQ(g.exponent(), 8u);
  EXPECT_TRUE(g.is_abelian());

  Group h = abelian_group({6, 15});
  EXPECT_EQ(h.order(), 90u);
  EXPECT_EQ(h.exponent(), 30u);

  EXPECT_EQ(abelian_group({}).order(), 1u);
}

TEST(Constructions, DihedralGroups) {
  for (u64 n : {3, 4, 6, 10, 15, 24}) {
    Group g = dihedral_group(n);
    EXPECT_EQ(g.order(), 2 * n) << n;
    EXPECT_EQ(g.exponent(), lcm_u64(n, 2)) << n;
    u64 classes = n % 2 ? (n - 1) / 2 + 2 : n / 2 + 3;
    EXPECT_EQ(g.classes().rep.size(), classes) << n;
    // n reflections, plus the involution in the rotation part for even n.
    EXPECT_EQ(count_involutions(g), n % 2 ? n : n + 1) << n;
  }
}

TEST(Constructions, DicyclicGroups) {
  for (u64 n : {2, 3, 4, 5, 9, 12}) {
    Group g = dicyclic_group(n);
    EXPECT_EQ(g.order(), 4 * n) << n;
    EXPECT_EQ(count_involutions(g), 1u) << n;  // only c^n squares to 1
    EXPECT_EQ(g.center().size(), 2u) << n;
  }
  EXPECT_TRUE(quaternion_group().is_isomorphic_to_q8());
  EXPECT_FALSE(dicyclic_group(4).is_isomorphic_to_q8());
}

TEST(Constructions, Order16Extensions) {
  Group sd = semidihedral_group_16(), m = modular_group_16();
  for (const Group* g : {&sd, &m}) {
    EXPECT_EQ(g->order(), 16u);
    EXPECT_EQ(g->exponent(), 8u);
  }
  EXPECT_EQ(degree_multiset(sd), (std::multiset<u64>{1, 1, 1, 1, 2, 2, 2}));
  EXPECT_EQ(degree_multiset(m), (std::multiset<u64>{1, 1, 1, 1, 1, 1, 1, 1, 2, 2}));
  EXPECT_EQ(sd.derived_subgroup().size(), 4u);
  EXPECT_EQ(m.derived_subgroup().size(), 2u);
  EXPECT_EQ(count_involutions(sd), 5u);
  EXPECT_EQ(count_involutions(m), 3u);
}

TEST(Constructions, MetacyclicFrobenius) {
  Group g = metacyclic_group(7, 3, 2);
  EXPECT_EQ(g.order(), 21u);
  EXPECT_EQ(g.center().size(), 1u);
  EXPECT_EQ(degree_multiset(g), (std::multiset<u64>{1, 1, 1, 3, 3}));
}

TEST(Constructions, MetacyclicOrder117) {
  Group g = metacyclic_group(13, 9, 3);
  EXPECT_EQ(g.order(), 117u);
  EXPECT_EQ(g.exponent(), 117u);
  EXPECT_EQ(g.center().size(), 3u);
  std::multiset<u64> expect;
  for (int i = 0; i < 9; ++i) expect.insert(1);
  for (int i = 0; i < 12; ++i) expect.insert(3);
  EXPECT_EQ(degree_multiset(g), expect);
}

TEST(Constructions, MetacyclicOrder40) {
  Group g = metacyclic_group(5, 8, 2);
  EXPECT_EQ(g.order(), 40u);
  EXPECT_EQ(g.exponent(), 40u);
  EXPECT_EQ(g.center().size(), 2u);
  EXPECT_EQ(count_involutions(g), 1u);
  EXPECT_EQ(degree_multiset(g), (std::multiset<u64>{1, 1, 1, 1, 1, 1, 1, 1, 4, 4}));
}

TEST(Constructions, Extraspecial27) {
  Group a = extraspecial_27_exponent_3(), b = extraspecial_27_exponent_9();
  const std::multiset<u64> degs{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3};
  for (const Group* g : {&a, &b}) {
    EXPECT_EQ(g->order(), 27u);
    EXPECT_EQ(g->center().size(), 3u);
    EXPECT_EQ(g->derived_subgroup().size(), 3u);
    EXPECT_EQ(degree_multiset(*g), degs);
  }
  EXPECT_EQ(a.exponent(), 3u);
  EXPECT_EQ(b.exponent(), 9u);
}

TEST(Constructions, SpecialLinear23) {
  Group g = sl_2_3();
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(g.center().size(), 2u);
  EXPECT_EQ(count_involutions(g), 1u);
  EXPECT_EQ(degree_multiset(g), (std::multiset<u64>{1, 1, 1, 2, 2, 2, 3}));
}

TEST(Constructions, TypeQ8Example48) {
  Group g = type_q8_example_48();
  EXPECT_EQ(g.order(), 48u);
  EXPECT_TRUE(g.is_quasi_elementary_at(2));
  EXPECT_EQ(g.sylow(2).size(), 16u);
  EXPECT_EQ(degree_multiset(g),
            (std::multiset<u64>{1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 4}));
}

TEST(Constructions, TypeQdExample272) {
  Group g = type_qd_example_272();
  EXPECT_EQ(g.order(), 272u);
  EXPECT_TRUE(g.is_quasi_elementary_at(2));
  CharacterTable t = CharacterTable::compute(g);
  u64 deg4 = 0, faithful4 = 0;
  for (std::size_t i = 0; i < t.num_rows(); ++i)
    if (t.degree(i) == 4) {
      ++deg4;
      if (is_faithful(t, i)) ++faithful4;
    }
  EXPECT_EQ(deg4, 8u);
  EXPECT_EQ(faithful4, 8u);
}

TEST(Constructions, SymmetricAndAlternating) {
  EXPECT_EQ(symmetric_group(4).order(), 24u);
  EXPECT_EQ(symmetric_group(5).order(), 120u);
  EXPECT_EQ(alternating_group(4).order(), 12u);
  EXPECT_EQ(alternating_group(5).order(), 60u);
  EXPECT_EQ(alternating_group(5).classes().rep.size(), 5u);
  EXPECT_EQ(symmetric_group(5).classes().rep.size(), 7u);
  EXPECT_EQ(alternating_group(5).derived_subgroup().size(), 60u);  // perfect
}

TEST(Constructions, DirectProducts) {
  Group g = Group::polycyclic(pc_direct_product(dicyclic_rep(2), cyclic_rep(3)));
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(g.exponent(), 12u);
  EXPECT_EQ(g.center().size(), 6u);
  EXPECT_EQ(count_involutions(g), 1u);
}

TEST(Constructions, H4ReflectionGroup) {
  Group g = h4_reflection_group();
  EXPECT_EQ(g.order(), 14400u);
  EXPECT_EQ(g.exponent(), 60u);
  EXPECT_EQ(g.classes().rep.size(), 34u);
  EXPECT_EQ(g.center().size(), 2u);
}

TEST(Constructions, CorpusShape) {
  auto corpus = small_group_corpus();
  EXPECT_GE(corpus.size(), 200u);
  std::set<std::string> names;
  std::map<u64, u64> by_order;
  for (const auto& ng : corpus) {
    EXPECT_TRUE(names.insert(ng.name).second) << "duplicate name " << ng.name;
    u64 n = ng.group.order();
    EXPECT_GE(n, 1u);
    EXPECT_LE(n, 200u) << ng.name;
    ++by_order[n];
  }
  // A spread of orders, not just a heap of tiny groups.
  u64 above_100 = 0;
  for (const auto& [n, c] : by_order)
    if (n > 100) above_100 += c;
  EXPECT_GE(above_100, 10u);
}
