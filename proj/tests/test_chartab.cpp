#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "schur/chartab.hpp"
#include "schur/group.hpp"
#include "schur/padic.hpp"

using namespace schur;

namespace {

Group make_perm(u64 degree, const std::vector<std::string>& cycles) {
  std::vector<Elt> gens;
  for (const auto& c : cycles) gens.push_back(parse_permutation(c, degree));
  return Group::permutation(degree, std::move(gens));
}

Group s3() { return make_perm(3, {"(1,2)", "(1,2,3)"}); }
Group s4() { return make_perm(4, {"(1,2)", "(1,2,3,4)"}); }
Group c_n(u64 n) {
  Elt g(n);
  for (u64 i = 0; i < n; ++i) g[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Group::permutation(n, {g});
}
Group v4() { return make_perm(4, {"(1,2)", "(3,4)"}); }
// C7 : C3, the x -> 2x action on Z/7
Group g21() { return make_perm(7, {"(1,2,3,4,5,6,7)", "(1,2,4)(3,6,5)"}); }
Group s3xc4() { return make_perm(7, {"(1,2)", "(1,2,3)", "(4,5,6,7)"}); }

PcRep quaternion_rep() {
  PcRep rep;
  rep.relord = {2, 2, 2};
  rep.power_tail.resize(3);
  rep.power_tail[0] = {0, 0, 1};
  rep.power_tail[1] = {0, 0, 1};
  rep.conj.assign(3, std::vector<Elt>(3));
  rep.conj[0][1] = {0, 1, 1};
  return rep;
}

// dihedral of order 8: same presentation minus the s^2 = z relation
PcRep dihedral8_rep() {
  PcRep rep;
  rep.relord = {2, 2, 2};
  rep.power_tail.resize(3);
  rep.power_tail[1] = {0, 0, 1};
  rep.conj.assign(3, std::vector<Elt>(3));
  rep.conj[0][1] = {0, 1, 1};
  return rep;
}

// dicyclic of order 12: <s, r | r^6, s^2 = r^3, r^s = r^-1> along G > <r> > <r^2>
PcRep dicyclic12_rep() {
  PcRep rep;
  rep.relord = {2, 2, 3};
  rep.power_tail.resize(3);
  rep.power_tail[0] = {0, 1, 1};  // s^2 = r^3
  rep.power_tail[1] = {0, 0, 1};  // r^2 carries into the bottom generator
  rep.conj.assign(3, std::vector<Elt>(3));
  rep.conj[0][1] = {0, 1, 2};  // r^s = r^5
  rep.conj[0][2] = {0, 0, 2};  // (r^2)^s = r^4
  return rep;
}

PcRep group272_rep() {
  PcRep rep;
  rep.relord = {2, 2, 2, 2, 17};
  rep.power_tail.resize(5);
  rep.power_tail[2] = {0, 0, 0, 1, 0};
  rep.conj.assign(5, std::vector<Elt>(5));
  rep.conj[0][1] = {0, 1, 1, 0, 0};
  rep.conj[0][2] = {0, 0, 1, 1, 0};
  rep.conj[1][2] = {0, 0, 1, 1, 0};
  rep.conj[0][4] = {0, 0, 0, 0, 16};
  return rep;
}

Cyclo z(u64 n, i64 e) { return Cyclo::root_of_unity(n, e); }

std::size_t row_with(const CharacterTable& T, const std::vector<Cyclo>& want) {
  for (std::size_t i = 0; i < T.num_rows(); ++i)
    if (T.row(i) == want) return i;
  ADD_FAILURE() << "expected character row not found";
  return 0;
}

std::vector<std::vector<Cyclo>> sorted_rows(const CharacterTable& T) {
  std::vector<std::vector<Cyclo>> rows;
  for (std::size_t i = 0; i < T.num_rows(); ++i) rows.push_back(T.row(i));
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<std::uint32_t> cyclic_subgroup(const Group& G, std::uint32_t x) {
  std::vector<std::uint32_t> out;
  u64 n = G.element_order(x);
  for (u64 k = 0; k < n; ++k) out.push_back(G.power(x, static_cast<i64>(k)));
  std::sort(out.begin(), out.end());
  return out;
}

// Induced character computed from nothing but the definition: average the
// subgroup values over every conjugate that lands back in the subgroup.
std::vector<Cyclo> induce_explicit(const Group& G, const GroupEmbedding& emb,
                                   const CharacterTable& subT,
                                   std::size_t eta) {
  const Classes& cl = G.classes();
  const Classes& cu = emb.group.classes();
  std::map<std::uint32_t, std::size_t> sub_class;
  for (std::uint32_t i = 0; i < emb.group.order(); ++i)
    sub_class[emb.to_parent[i]] = cu.of_elt[i];
  std::vector<Cyclo> out(cl.count());
  for (std::size_t c = 0; c < cl.count(); ++c) {
    Cyclo acc;
    for (std::uint32_t x = 0; x < G.order(); ++x) {
      auto it = sub_class.find(G.conj(cl.rep[c], x));
      if (it != sub_class.end()) acc = acc + subT.value(eta, it->second);
    }
    out[c] = acc.scaled(Rational(Int(1), Int(emb.group.order())));
  }
  return out;
}

// indicator straight from the definition, one group element at a time
int indicator_oracle(const Group& G, const CharacterTable& T, std::size_t i) {
  Cyclo acc;
  for (std::uint32_t e = 0; e < G.order(); ++e)
    acc = acc + T.value(i, G.class_of(G.mul(e, e)));
  acc = acc.scaled(Rational(Int(1), Int(G.order())));
  if (acc == Cyclo(1)) return 1;
  if (acc == Cyclo(-1)) return -1;
  EXPECT_EQ(acc, Cyclo(0));
  return 0;
}

const Block& block_containing(const std::vector<Block>& blocks, std::size_t row) {
  for (const auto& B : blocks)
    if (std::find(B.members.begin(), B.members.end(), row) != B.members.end())
      return B;
  ADD_FAILURE() << "no block contains row " << row;
  return blocks.front();
}

void expect_blocks_permuted(const CharacterTable& T,
                            const std::vector<Block>& blocks, u64 u) {
  for (const auto& B : blocks) {
    std::vector<std::size_t> image;
    for (auto i : B.members) image.push_back(galois_conjugate_row(T, i, u));
    std::sort(image.begin(), image.end());
    bool found = false;
    for (const auto& C : blocks) found |= C.members == image;
    EXPECT_TRUE(found) << "conjugate of a block under u=" << u
                       << " is not a block";
  }
}

}  // namespace

TEST(Table, SymmetricGroupOnThreePoints) {
  CharacterTable T = CharacterTable::compute(s3());
  ASSERT_EQ(T.num_classes(), 3u);
  EXPECT_EQ(T.class_size(0), 1u);
  EXPECT_EQ(T.class_size(1), 3u);
  EXPECT_EQ(T.class_size(2), 2u);
  EXPECT_EQ(T.degrees(), (std::vector<u64>{1, 1, 2}));
  auto rows = sorted_rows(T);
  std::vector<std::vector<Cyclo>> want = {
      {1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(rows, want);
  EXPECT_NO_THROW(verify_orthogonality(T));
  EXPECT_TRUE(T.attached());
  EXPECT_EQ(T.group().order(), 6u);
}

TEST(Table, QuaternionAndDihedralOfOrderEight) {
  CharacterTable Q = CharacterTable::compute(Group::polycyclic(quaternion_rep()));
  CharacterTable D = CharacterTable::compute(Group::polycyclic(dihedral8_rep()));
  for (const CharacterTable* T : {&Q, &D}) {
    EXPECT_EQ(T->degrees(), (std::vector<u64>{1, 1, 1, 1, 2}));
    // identity, the central involution, then three two-element classes
    EXPECT_EQ(T->class_size(0), 1u);
    EXPECT_EQ(T->class_size(1), 1u);
    EXPECT_EQ(T->row(4), (std::vector<Cyclo>{2, -2, 0, 0, 0}));
    // each non-trivial linear character is +1 on exactly one of the
    // two-element classes
    std::vector<std::vector<Cyclo>> want = {{1, 1, 1, 1, 1},
                                            {1, 1, 1, -1, -1},
                                            {1, 1, -1, 1, -1},
                                            {1, 1, -1, -1, 1},
                                            {2, -2, 0, 0, 0}};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(sorted_rows(*T), want);
  }
  // same table, opposite reality type for the faithful character
  EXPECT_EQ(frobenius_schur_indicator(Q, 4), -1);
  EXPECT_EQ(frobenius_schur_indicator(D, 4), 1);
}

TEST(Table, SymmetricGroupOnFourPoints) {
  CharacterTable T = CharacterTable::compute(s4());
  ASSERT_EQ(T.num_classes(), 5u);
  // canonical class order: 1, double transpositions, transpositions,
  // 3-cycles, 4-cycles
  EXPECT_EQ(T.class_order(1), 2u);
  EXPECT_EQ(T.class_size(1), 3u);
  EXPECT_EQ(T.class_size(2), 6u);
  EXPECT_EQ(T.class_size(3), 8u);
  EXPECT_EQ(T.class_order(4), 4u);
  EXPECT_EQ(T.degrees(), (std::vector<u64>{1, 1, 2, 3, 3}));
  std::vector<std::vector<Cyclo>> want = {{1, 1, 1, 1, 1},
                                          {1, 1, -1, 1, -1},
                                          {2, 2, 0, -1, 0},
                                          {3, -1, 1, 0, -1},
                                          {3, -1, -1, 0, 1}};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(sorted_rows(T), want);
}

TEST(Table, GroupOfOrder272) {
  Group G = Group::polycyclic(group272_rep());
  ASSERT_EQ(G.order(), 272u);
  CharacterTable T = CharacterTable::compute(G);
  EXPECT_EQ(T.exponent(), 136u);
  ASSERT_EQ(T.num_classes(), 47u);
  std::map<u64, int> by_degree;
  for (auto d : T.degrees()) ++by_degree[d];
  EXPECT_EQ(by_degree, (std::map<u64, int>{{1, 4}, {2, 35}, {4, 8}}));

  std::vector<std::size_t> faithful;
  for (std::size_t i = 0; i < T.num_rows(); ++i)
    if (is_faithful(T, i)) faithful.push_back(i);
  ASSERT_EQ(faithful.size(), 8u);
  for (auto i : faithful) {
    EXPECT_EQ(T.degree(i), 4u);
    EXPECT_EQ(frobenius_schur_indicator(T, i), 1);
    FieldSubgroup F = character_field(T, i);
    // the real subfield of the 17th cyclotomic field
    EXPECT_EQ(F.field_degree(), 8u);
    EXPECT_TRUE(F.contains(135));
  }
  EXPECT_NO_THROW(verify_orthogonality(T));
}

TEST(Table, OrthogonalityOnAbelianAndProductGroups) {
  for (Group G : {c_n(12), v4(), s3xc4()}) {
    CharacterTable T = CharacterTable::compute(G);
    EXPECT_NO_THROW(verify_orthogonality(T));
    EXPECT_EQ(T.num_rows(), T.num_classes());
  }
}

TEST(Table, ResourceGuardOnHugeClassCount) {
  try {
    CharacterTable::compute(c_n(1031));
    FAIL() << "expected a resource error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::resource);
  }
}

TEST(Fusion, SubgroupClassesEmbedPreservingOrders) {
  Group G = s3();
  std::uint32_t t = 0, r = 0;
  for (std::uint32_t x = 0; x < G.order(); ++x) {
    if (G.element_order(x) == 2) t = x;
    if (G.element_order(x) == 3) r = x;
  }
  auto embC2 = G.subgroup_group(cyclic_subgroup(G, t));
  EXPECT_EQ(class_fusion(embC2, G), (std::vector<std::uint32_t>{0, 1}));
  auto embC3 = G.subgroup_group(cyclic_subgroup(G, r));
  EXPECT_EQ(class_fusion(embC3, G), (std::vector<std::uint32_t>{0, 2, 2}));

  Group P = s4();
  std::vector<std::uint32_t> stab;
  for (std::uint32_t x = 0; x < P.order(); ++x)
    if (P.elements()[x][3] == 3) stab.push_back(x);
  auto embS3 = P.subgroup_group(stab);
  ASSERT_EQ(embS3.group.order(), 6u);
  EXPECT_EQ(class_fusion(embS3, P), (std::vector<std::uint32_t>{0, 2, 3}));
}

TEST(Induction, ReciprocityMatchesHandValues) {
  Group G = s3();
  CharacterTable T = CharacterTable::compute(G);
  std::uint32_t r = 0;
  for (std::uint32_t x = 0; x < G.order(); ++x)
    if (G.element_order(x) == 3) r = x;
  auto emb = G.subgroup_group(cyclic_subgroup(G, r));
  CharacterTable U = CharacterTable::compute(emb.group);
  auto fus = class_fusion(emb, G);

  std::size_t triv_u = row_with(U, {1, 1, 1});
  std::size_t faithful_u = U.num_rows();
  for (std::size_t i = 0; i < U.num_rows(); ++i)
    if (is_faithful(U, i)) {
      faithful_u = i;
      break;
    }
  ASSERT_LT(faithful_u, U.num_rows());

  std::size_t chi_triv = row_with(T, {1, 1, 1});
  std::size_t chi_sign = row_with(T, {1, -1, 1});
  std::size_t chi_std = row_with(T, {2, 0, -1});

  // a faithful character of the rotation subgroup induces the 2-dimensional
  // character, once
  EXPECT_EQ(induced_inner_product(U, faithful_u, T, chi_std, fus), 1u);
  EXPECT_EQ(induced_inner_product(U, faithful_u, T, chi_triv, fus), 0u);
  EXPECT_EQ(induced_inner_product(U, faithful_u, T, chi_sign, fus), 0u);
  // the trivial character induces the permutation character 1 + sign
  EXPECT_EQ(induced_inner_product(U, triv_u, T, chi_triv, fus), 1u);
  EXPECT_EQ(induced_inner_product(U, triv_u, T, chi_sign, fus), 1u);
  EXPECT_EQ(induced_inner_product(U, triv_u, T, chi_std, fus), 0u);
}

TEST(Induction, ExplicitInductionAgreesWithReciprocity) {
  struct Case {
    Group G;
    std::vector<std::uint32_t> sub;
  };
  std::vector<Case> cases;
  {
    Group G = s3();
    for (std::uint32_t x = 0; x < G.order(); ++x)
      if (G.element_order(x) > 1) cases.push_back({G, cyclic_subgroup(G, x)});
  }
  {
    Group G = s4();
    std::vector<std::uint32_t> stab;
    for (std::uint32_t x = 0; x < G.order(); ++x) {
      if (G.elements()[x][3] == 3) stab.push_back(x);
      if (G.element_order(x) == 4 && cases.size() < 8)
        cases.push_back({G, cyclic_subgroup(G, x)});
    }
    cases.push_back({G, stab});
  }
  {
    Group Q = Group::polycyclic(quaternion_rep());
    std::uint32_t i4 = 0;
    for (std::uint32_t x = 0; x < Q.order(); ++x)
      if (Q.element_order(x) == 4) i4 = x;
    cases.push_back({Q, cyclic_subgroup(Q, i4)});
  }

  for (const auto& cs : cases) {
    const Group& G = cs.G;
    CharacterTable T = CharacterTable::compute(G);
    auto emb = G.subgroup_group(cs.sub);
    CharacterTable U = CharacterTable::compute(emb.group);
    auto fus = class_fusion(emb, G);
    u64 index = G.order() / emb.group.order();
    for (std::size_t eta = 0; eta < U.num_rows(); ++eta) {
      auto ind = induce_explicit(G, emb, U, eta);
      EXPECT_EQ(ind[0], Cyclo(Int(index * U.degree(eta))));
      u64 total = 0;
      for (std::size_t chi = 0; chi < T.num_rows(); ++chi) {
        u64 via_restriction = induced_inner_product(U, eta, T, chi, fus);
        u64 via_definition = multiplicity_inner_product(T, ind, T.row(chi));
        EXPECT_EQ(via_restriction, via_definition);
        total += via_restriction * T.degree(chi);
      }
      EXPECT_EQ(total, index * U.degree(eta));
    }
  }
}

TEST(Indicator, MatchesElementwiseAverage) {
  struct Case {
    Group G;
    std::vector<int> expected;  // sorted indicator multiset
  };
  std::vector<Case> cases;
  cases.push_back({s3(), {1, 1, 1}});
  cases.push_back({s4(), {1, 1, 1, 1, 1}});
  cases.push_back({Group::polycyclic(quaternion_rep()), {-1, 1, 1, 1, 1}});
  cases.push_back({Group::polycyclic(dihedral8_rep()), {1, 1, 1, 1, 1}});
  cases.push_back({c_n(4), {0, 0, 1, 1}});
  cases.push_back({g21(), {0, 0, 0, 0, 1}});
  for (auto& cs : cases) {
    CharacterTable T = CharacterTable::compute(cs.G);
    std::vector<int> got;
    for (std::size_t i = 0; i < T.num_rows(); ++i) {
      int ind = frobenius_schur_indicator(T, i);
      EXPECT_EQ(ind, indicator_oracle(cs.G, T, i));
      got.push_back(ind);
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, cs.expected);
  }
}

TEST(Kernel, LinearCharactersOfQuaternionHaveOrderFourKernels) {
  CharacterTable T = CharacterTable::compute(Group::polycyclic(quaternion_rep()));
  std::size_t triv = row_with(T, {1, 1, 1, 1, 1});
  EXPECT_EQ(kernel_classes(T, triv).size(), 5u);
  for (std::size_t i = 0; i < T.num_rows(); ++i) {
    if (T.degree(i) != 1 || i == triv) continue;
    u64 kernel_order = 0;
    for (auto c : kernel_classes(T, i)) kernel_order += T.class_size(c);
    EXPECT_EQ(kernel_order, 4u);
  }
  EXPECT_TRUE(is_faithful(T, 4));

  CharacterTable S = CharacterTable::compute(s3());
  std::size_t sign = row_with(S, {1, -1, 1});
  EXPECT_EQ(kernel_classes(S, sign), (std::vector<std::uint32_t>{0, 2}));
  EXPECT_FALSE(is_faithful(S, sign));
  EXPECT_TRUE(is_faithful(S, row_with(S, {2, 0, -1})));
}

TEST(Blocks, HandComputedPartitions) {
  {
    CharacterTable T = CharacterTable::compute(s3());
    auto b3 = p_blocks(T, 3);
    ASSERT_EQ(b3.size(), 1u);
    EXPECT_EQ(b3[0].members, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(b3[0].defect, 1u);

    auto b2 = p_blocks(T, 2);
    ASSERT_EQ(b2.size(), 2u);
    EXPECT_EQ(b2[0].members, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(b2[0].defect, 1u);
    EXPECT_EQ(b2[1].members, (std::vector<std::size_t>{2}));
    EXPECT_EQ(b2[1].defect, 0u);

    // 5 does not divide 6: everything splits into defect-0 singletons
    auto b5 = p_blocks(T, 5);
    ASSERT_EQ(b5.size(), 3u);
    for (const auto& B : b5) {
      EXPECT_EQ(B.members.size(), 1u);
      EXPECT_EQ(B.defect, 0u);
    }
  }
  {
    CharacterTable T = CharacterTable::compute(s4());
    auto b3 = p_blocks(T, 3);
    ASSERT_EQ(b3.size(), 3u);
    EXPECT_EQ(b3[0].members, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(b3[0].defect, 1u);
    EXPECT_EQ(b3[1].members, (std::vector<std::size_t>{3}));
    EXPECT_EQ(b3[1].defect, 0u);
    EXPECT_EQ(b3[2].members, (std::vector<std::size_t>{4}));
    EXPECT_EQ(b3[2].defect, 0u);

    auto b2 = p_blocks(T, 2);
    ASSERT_EQ(b2.size(), 1u);
    EXPECT_EQ(b2[0].members.size(), 5u);
    EXPECT_EQ(b2[0].defect, 3u);
  }
  {
    CharacterTable T =
        CharacterTable::compute(Group::polycyclic(quaternion_rep()));
    auto b2 = p_blocks(T, 2);
    ASSERT_EQ(b2.size(), 1u);
    EXPECT_EQ(b2[0].defect, 3u);
  }
  {
    CharacterTable T = CharacterTable::compute(g21());
    auto b7 = p_blocks(T, 7);
    ASSERT_EQ(b7.size(), 1u);
    EXPECT_EQ(b7[0].members.size(), 5u);
    EXPECT_EQ(b7[0].defect, 1u);
    auto b3 = p_blocks(T, 3);
    ASSERT_EQ(b3.size(), 3u);
    EXPECT_EQ(b3[0].members, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(b3[0].defect, 1u);
    EXPECT_EQ(b3[1].members.size(), 1u);
    EXPECT_EQ(b3[1].defect, 0u);
  }
}

TEST(Blocks, DicyclicGroupOfOrderTwelve) {
  Group G = Group::polycyclic(dicyclic12_rep());
  ASSERT_EQ(G.order(), 12u);
  CharacterTable T = CharacterTable::compute(G);
  EXPECT_EQ(T.degrees(), (std::vector<u64>{1, 1, 1, 1, 2, 2}));
  // class order: 1, central involution, rotation of order 3, two classes of
  // order-4 elements, rotation of order 6
  ASSERT_EQ(T.num_classes(), 6u);
  EXPECT_EQ(T.class_order(2), 3u);
  EXPECT_EQ(T.class_order(3), 4u);
  EXPECT_EQ(T.class_order(4), 4u);
  EXPECT_EQ(T.class_order(5), 6u);

  std::size_t chi1 = row_with(T, {2, -2, -1, 0, 0, 1});   // faithful
  std::size_t chi2 = row_with(T, {2, 2, -1, 0, 0, -1});   // factors through S3
  std::size_t triv = row_with(T, {1, 1, 1, 1, 1, 1});
  std::size_t lam2 = row_with(T, {1, 1, 1, -1, -1, 1});
  EXPECT_TRUE(is_faithful(T, chi1));
  EXPECT_EQ(frobenius_schur_indicator(T, chi1), -1);

  auto b3 = p_blocks(T, 3);
  ASSERT_EQ(b3.size(), 2u);
  std::vector<std::size_t> principal{triv, lam2, chi2};
  std::sort(principal.begin(), principal.end());
  EXPECT_EQ(block_containing(b3, triv).members, principal);
  const Block& Bf = block_containing(b3, chi1);
  EXPECT_EQ(Bf.members.size(), 3u);
  EXPECT_EQ(Bf.defect, 1u);
  for (auto i : Bf.members)
    if (i != chi1) {
      EXPECT_EQ(T.degree(i), 1u);
      EXPECT_EQ(frobenius_schur_indicator(T, i), 0);
    }

  auto b2 = p_blocks(T, 2);
  ASSERT_EQ(b2.size(), 2u);
  EXPECT_EQ(block_containing(b2, triv).members.size(), 4u);
  EXPECT_EQ(block_containing(b2, triv).defect, 2u);
  std::vector<std::size_t> degree2{chi1, chi2};
  std::sort(degree2.begin(), degree2.end());
  EXPECT_EQ(block_containing(b2, chi1).members, degree2);
  EXPECT_EQ(block_containing(b2, chi1).defect, 1u);
}

TEST(Blocks, GaloisConjugationPermutesBlocks) {
  struct Case {
    Group G;
    std::vector<u64> primes;
  };
  std::vector<Case> cases;
  cases.push_back({g21(), {3, 7}});
  cases.push_back({Group::polycyclic(dicyclic12_rep()), {2, 3}});
  cases.push_back({c_n(12), {2, 3}});
  for (auto& cs : cases) {
    CharacterTable T = CharacterTable::compute(cs.G);
    for (u64 p : cs.primes) {
      auto blocks = p_blocks(T, p);
      for (u64 u = 1; u < T.exponent(); ++u)
        if (std::gcd(u, T.exponent()) == 1)
          expect_blocks_permuted(T, blocks, u);
    }
  }
}

TEST(Blocks, CyclicDefectCertificate) {
  {
    Group G = s3();
    CharacterTable T = CharacterTable::compute(G);
    EXPECT_EQ(cyclic_defect_status(G, p_blocks(T, 3)[0]), CyclicDefect::yes);
  }
  {
    Group G = Group::polycyclic(quaternion_rep());
    CharacterTable T = CharacterTable::compute(G);
    EXPECT_EQ(cyclic_defect_status(G, p_blocks(T, 2)[0]), CyclicDefect::no);
  }
  {
    Group G = s4();
    CharacterTable T = CharacterTable::compute(G);
    EXPECT_EQ(cyclic_defect_status(G, p_blocks(T, 2)[0]), CyclicDefect::no);
    std::size_t triv = row_with(T, {1, 1, 1, 1, 1});
    EXPECT_EQ(cyclic_defect_status(G, block_containing(p_blocks(T, 3), triv)),
              CyclicDefect::yes);
  }
  {
    Group G = g21();
    CharacterTable T = CharacterTable::compute(G);
    EXPECT_EQ(cyclic_defect_status(G, p_blocks(T, 7)[0]), CyclicDefect::yes);
  }
  {
    // S3 x C4 has a non-cyclic Sylow 2-subgroup and a 2-block of
    // intermediate defect, which the cheap certificate cannot decide
    Group G = s3xc4();
    CharacterTable T = CharacterTable::compute(G);
    auto blocks = p_blocks(T, 2);
    ASSERT_EQ(blocks.size(), 2u);
    bool saw_full = false, saw_middle = false;
    for (const auto& B : blocks) {
      if (B.defect == 3) {
        EXPECT_EQ(B.members.size(), 8u);
        EXPECT_EQ(cyclic_defect_status(G, B), CyclicDefect::no);
        saw_full = true;
      }
      if (B.defect == 2) {
        EXPECT_EQ(B.members.size(), 4u);
        EXPECT_EQ(cyclic_defect_status(G, B), CyclicDefect::unknown);
        saw_middle = true;
      }
    }
    EXPECT_TRUE(saw_full);
    EXPECT_TRUE(saw_middle);
  }
}

TEST(Blocks, PrincipalBlockHasFullDefect) {
  struct Case {
    Group G;
    std::vector<u64> primes;
  };
  std::vector<Case> cases;
  cases.push_back({s3(), {2, 3}});
  cases.push_back({s4(), {2, 3}});
  cases.push_back({g21(), {3, 7}});
  cases.push_back({Group::polycyclic(dicyclic12_rep()), {2, 3}});
  for (auto& cs : cases) {
    CharacterTable T = CharacterTable::compute(cs.G);
    std::size_t triv = 0;
    std::vector<Cyclo> ones(T.num_classes(), Cyclo(1));
    triv = row_with(T, ones);
    for (u64 p : cs.primes) {
      auto blocks = p_blocks(T, p);
      std::size_t covered = 0;
      for (const auto& B : blocks) covered += B.members.size();
      EXPECT_EQ(covered, T.num_rows());
      EXPECT_EQ(block_containing(blocks, triv).defect,
                valuation(cs.G.order(), p));
    }
  }
}

TEST(Benard, FieldDegreeOfBlockValues) {
  {
    Group G = g21();
    CharacterTable T = CharacterTable::compute(G);
    PAdicGaloisGroup G7 = padic_galois(7, T.exponent());
    const auto blocks = p_blocks(T, 7);
    for (auto i : blocks[0].members)
      EXPECT_EQ(benard_K_degree(T, blocks[0], i, G7), 1u);

    PAdicGaloisGroup G3 = padic_galois(3, T.exponent());
    auto b3 = p_blocks(T, 3);
    for (auto i : b3[0].members)
      EXPECT_EQ(benard_K_degree(T, b3[0], i, G3), 1u);
  }
  {
    Group G = Group::polycyclic(dicyclic12_rep());
    CharacterTable T = CharacterTable::compute(G);
    std::size_t chi1 = row_with(T, {2, -2, -1, 0, 0, 1});
    std::size_t chi2 = row_with(T, {2, 2, -1, 0, 0, -1});
    PAdicGaloisGroup G3 = padic_galois(3, T.exponent());
    auto b3 = p_blocks(T, 3);
    // the block of the faithful character carries the values +-i on the
    // order-4 classes, and i is not 3-adically rational
    EXPECT_EQ(benard_K_degree(T, block_containing(b3, chi1), chi1, G3), 2u);
    EXPECT_EQ(benard_K_degree(T, block_containing(b3, chi2), chi2, G3), 1u);

    PAdicGaloisGroup G2 = padic_galois(2, T.exponent());
    auto b2 = p_blocks(T, 2);
    const Block& B = block_containing(b2, chi1);
    EXPECT_EQ(cyclic_defect_status(G, B), CyclicDefect::yes);
    EXPECT_EQ(benard_K_degree(T, B, chi1, G2), 1u);
  }
  {
    Group G = Group::polycyclic(group272_rep());
    CharacterTable T = CharacterTable::compute(G);
    std::size_t chi = T.num_rows();
    for (std::size_t i = 0; i < T.num_rows(); ++i)
      if (is_faithful(T, i)) {
        chi = i;
        break;
      }
    ASSERT_LT(chi, T.num_rows());
    PAdicGaloisGroup G17 = padic_galois(17, T.exponent());
    auto blocks = p_blocks(T, 17);
    const Block& B = block_containing(blocks, chi);
    EXPECT_EQ(cyclic_defect_status(G, B), CyclicDefect::yes);
    EXPECT_EQ(benard_K_degree(T, B, chi, G17), 1u);
  }
}

TEST(LinearCharacters, CyclicGroupsAndRejection) {
  {
    auto L = linear_characters_of_cyclic(c_n(1));
    EXPECT_EQ(L.table.num_rows(), 1u);
    EXPECT_EQ(L.faithful, std::vector<bool>{true});
  }
  {
    auto L = linear_characters_of_cyclic(c_n(2));
    std::vector<std::vector<Cyclo>> want = {{1, 1}, {1, -1}};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(sorted_rows(L.table), want);
    EXPECT_EQ(std::count(L.faithful.begin(), L.faithful.end(), true), 1);
  }
  {
    auto L = linear_characters_of_cyclic(c_n(4));
    EXPECT_EQ(L.table.num_rows(), 4u);
    EXPECT_EQ(std::count(L.faithful.begin(), L.faithful.end(), true), 2);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(L.table.degree(i), 1u);
  }
  {
    auto L = linear_characters_of_cyclic(c_n(12));
    EXPECT_EQ(L.table.num_rows(), 12u);
    EXPECT_EQ(std::count(L.faithful.begin(), L.faithful.end(), true), 4);
    for (std::size_t i = 0; i < 12; ++i)
      if (L.faithful[i])
        EXPECT_EQ(character_field(L.table, i).field_degree(), 4u);
  }
  try {
    linear_characters_of_cyclic(v4());
    FAIL() << "expected a domain error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
  }
}

TEST(DetachedTable, HandBuiltCyclicTableOfOrderFive) {
  std::vector<std::vector<Cyclo>> rows(5, std::vector<Cyclo>(5));
  for (u64 j = 0; j < 5; ++j)
    for (u64 i = 0; i < 5; ++i)
      rows[j][i] = z(5, static_cast<i64>(i * j % 5));
  std::map<u64, std::vector<std::uint32_t>> pm;
  pm[2] = {0, 2, 4, 1, 3};

  CharacterTable T = CharacterTable::detached(
      5, {1, 5, 5, 5, 5}, {1, 1, 1, 1, 1}, {0, 4, 3, 2, 1}, pm, rows);
  EXPECT_FALSE(T.attached());
  EXPECT_THROW(T.group(), Error);
  EXPECT_EQ(T.exponent(), 5u);
  EXPECT_EQ(T.identity_class(), 0u);
  EXPECT_EQ(T.degrees(), (std::vector<u64>{1, 1, 1, 1, 1}));

  // k = 0, 1, order-1 and the stored k = 2 all resolve; k = 3 has no data
  EXPECT_EQ(T.power_class(1, 2), 2u);
  EXPECT_EQ(T.power_class(3, 7), 1u);   // 7 = 2 mod 5, map says 3 -> 1
  EXPECT_EQ(T.power_class(2, 4), 3u);   // 4 = -1 mod 5, inverse class
  EXPECT_EQ(T.power_class(4, 5), 0u);   // fifth powers die
  EXPECT_THROW(T.power_class(1, 3), Error);

  for (std::size_t i = 1; i < 5; ++i) {
    EXPECT_EQ(frobenius_schur_indicator(T, i), 0);
    EXPECT_TRUE(is_faithful(T, i));
  }
  EXPECT_EQ(frobenius_schur_indicator(T, 0), 1);

  auto blocks = p_blocks(T, 5);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].defect, 1u);
}

TEST(DetachedTable, RoundTripFromComputedTable) {
  Group G = s3();
  CharacterTable A = CharacterTable::compute(G);
  std::vector<u64> orders, sizes;
  std::vector<std::uint32_t> inv;
  std::vector<std::vector<Cyclo>> rows;
  for (std::size_t c = 0; c < A.num_classes(); ++c) {
    orders.push_back(A.class_order(c));
    sizes.push_back(A.class_size(c));
    inv.push_back(A.inverse_class(c));
  }
  for (std::size_t i = 0; i < A.num_rows(); ++i) rows.push_back(A.row(i));
  std::map<u64, std::vector<std::uint32_t>> pm;
  pm[2] = G.class_power_map(2);

  CharacterTable D = CharacterTable::detached(G.order(), orders, sizes, inv,
                                              pm, rows);
  EXPECT_EQ(D.degrees(), A.degrees());
  for (std::size_t i = 0; i < A.num_rows(); ++i) {
    EXPECT_EQ(frobenius_schur_indicator(D, i), frobenius_schur_indicator(A, i));
    EXPECT_EQ(kernel_classes(D, i), kernel_classes(A, i));
  }
  auto ba = p_blocks(A, 3), bd = p_blocks(D, 3);
  ASSERT_EQ(ba.size(), bd.size());
  for (std::size_t b = 0; b < ba.size(); ++b) {
    EXPECT_EQ(ba[b].members, bd[b].members);
    EXPECT_EQ(ba[b].defect, bd[b].defect);
  }
}

TEST(DetachedTable, RejectsCorruptData) {
  std::vector<std::vector<Cyclo>> rows(5, std::vector<Cyclo>(5));
  for (u64 j = 0; j < 5; ++j)
    for (u64 i = 0; i < 5; ++i)
      rows[j][i] = z(5, static_cast<i64>(i * j % 5));
  std::map<u64, std::vector<std::uint32_t>> pm;
  pm[2] = {0, 2, 4, 1, 3};
  std::vector<u64> orders{1, 5, 5, 5, 5}, sizes{1, 1, 1, 1, 1};
  std::vector<std::uint32_t> inv{0, 4, 3, 2, 1};

  auto expect_domain = [](auto&& thunk) {
    try {
      thunk();
      FAIL() << "expected a domain error";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::domain);
    }
  };

  // class sizes that do not sum to the group order
  expect_domain([&] {
    CharacterTable::detached(5, orders, {1, 1, 1, 1, 2}, inv, pm, rows);
  });
  // inverse map pairing classes of different element order
  expect_domain([&] {
    CharacterTable::detached(5, {1, 5, 5, 5, 2}, sizes, inv, pm, rows);
  });
  // power map sending the identity somewhere else
  {
    auto bad = pm;
    bad[2] = {1, 2, 4, 0, 3};
    expect_domain(
        [&] { CharacterTable::detached(5, orders, sizes, inv, bad, rows); });
  }
  // non-integer entry in the identity column
  {
    auto bad = rows;
    bad[1][0] = z(5, 1);
    expect_domain(
        [&] { CharacterTable::detached(5, orders, sizes, inv, pm, bad); });
  }
  // two values swapped in one row break orthogonality
  {
    auto bad = rows;
    std::swap(bad[1][1], bad[1][2]);
    expect_domain(
        [&] { CharacterTable::detached(5, orders, sizes, inv, pm, bad); });
  }
  // short row
  {
    auto bad = rows;
    bad[3].pop_back();
    expect_domain(
        [&] { CharacterTable::detached(5, orders, sizes, inv, pm, bad); });
  }
}

TEST(Galois, ConjugateRowsAndCharacterFields) {
  {
    CharacterTable T = CharacterTable::compute(c_n(3));
    std::size_t a = T.num_rows(), b = T.num_rows();
    for (std::size_t i = 0; i < 3; ++i) {
      if (character_field(T, i).field_degree() == 2) (a == 3 ? a : b) = i;
      else
        EXPECT_EQ(galois_conjugate_row(T, i, 2), i);
    }
    ASSERT_LT(a, 3u);
    ASSERT_LT(b, 3u);
    EXPECT_EQ(galois_conjugate_row(T, a, 2), b);
    EXPECT_EQ(galois_conjugate_row(T, b, 2), a);
  }
  {
    CharacterTable T = CharacterTable::compute(s3());
    for (std::size_t i = 0; i < T.num_rows(); ++i) {
      EXPECT_EQ(character_field(T, i).field_degree(), 1u);
      EXPECT_EQ(galois_conjugate_row(T, i, 5), i);
    }
  }
  {
    CharacterTable T = CharacterTable::compute(g21());
    std::vector<std::size_t> deg3;
    for (std::size_t i = 0; i < T.num_rows(); ++i)
      if (T.degree(i) == 3) deg3.push_back(i);
    ASSERT_EQ(deg3.size(), 2u);
    for (auto i : deg3)
      EXPECT_EQ(character_field(T, i).field_degree(), 2u);
    // 2 is a square mod 7, 17 = 3 mod 7 is not
    EXPECT_EQ(galois_conjugate_row(T, deg3[0], 2), deg3[0]);
    EXPECT_EQ(galois_conjugate_row(T, deg3[0], 17), deg3[1]);
    EXPECT_EQ(galois_conjugate_row(T, deg3[1], 17), deg3[0]);
    // conjugate characters share their indicator
    for (std::size_t i = 0; i < T.num_rows(); ++i)
      for (u64 u = 1; u < 21; ++u)
        if (std::gcd(u, static_cast<u64>(21)) == 1)
          EXPECT_EQ(frobenius_schur_indicator(T, galois_conjugate_row(T, i, u)),
                    frobenius_schur_indicator(T, i));
  }
  {
    CharacterTable T = CharacterTable::compute(Group::polycyclic(quaternion_rep()));
    for (std::size_t i = 0; i < T.num_rows(); ++i)
      EXPECT_EQ(character_field(T, i).field_degree(), 1u);
  }
}
