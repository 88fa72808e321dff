#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "floer/chain.hpp"
#include "floer/random.hpp"
#include "oracles.hpp"

using namespace floer;
using fixture::arrow;

namespace {

AbelianGroup Zr(std::size_t r) { return {r, {}}; }
AbelianGroup Zmod(long n) { return {0, {Int(n)}}; }

ChainComplex permuted(const ChainComplex& C, std::uint64_t seed) {
  std::vector<std::size_t> perm(C.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  Rng r(seed);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[r.uniform(0, static_cast<int>(i) - 1)]);
  std::vector<Generator> gens;
  for (std::size_t i : perm) gens.push_back({"r" + C.mod.name(i), C.mod.degree(i)});
  ChainComplex out(GradedModule(gens), C.ring);
  for (const auto& [k, v] : C.d.entries()) out.add_d("r" + C.mod.name(k.second), "r" + C.mod.name(k.first), v);
  return out;
}

}  // namespace

TEST(Validate, SingleGeneratorPasses) {
  EXPECT_TRUE(validate(fixture::point()).ok());
}

TEST(Validate, TwoStepComplexPasses) {
  EXPECT_TRUE(validate(arrow(2)).ok());
}

TEST(Validate, YAnticommutationFailure) {
  ChainComplex C(GradedModule({{"a", 0}, {"b", 1}}));
  C.add_d("b", "a", 1);
  C.y = IntMatrix(2, 2);
  C.add_y("a", "b", 1);
  const ValidationReport r = validate(C);
  EXPECT_FALSE(r.passed("dY"));
  EXPECT_TRUE(r.passed("d2"));
  EXPECT_TRUE(r.passed("Y2"));
  EXPECT_THROW(require_valid(C), ValidationError);
}

TEST(Validate, InhomogeneousEntryFailsDegreeLaw) {
  ChainComplex C(GradedModule({{"a", 0}, {"b", 2}}));
  C.add_d("b", "a", 1);
  const ValidationReport r = validate(C);
  EXPECT_FALSE(r.passed("degree"));
  EXPECT_EQ(r.laws[0].witness, "d b->a");
}

TEST(Validate, EmptyComplexIsValid) {
  ChainComplex C(GradedModule{});
  EXPECT_TRUE(validate(C).ok());
  EXPECT_TRUE(homology(C).groups.empty());
}

// Each law gets its own randomized falsification: perturb one homogeneous
// entry and compare the failing set with the dense-matrix oracle.
class LawFalsification : public ::testing::TestWithParam<const char*> {};

TEST_P(LawFalsification, PerturbationCaughtExactlyAsOraclePredicts) {
  const std::string law = GetParam();
  int caught = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Rng r(seed);
    RandomParams p;
    p.ring = seed % 2 ? Ring::Z() : Ring::F(2);
    ChainComplex C = (law == "dU") ? random_u_complex(r, p) : random_y_complex(r, p);
    if (law == "d2") C = random_complex(r, p);
    ASSERT_TRUE(validate(C).ok());
    IntMatrix* target = &C.d;
    int k = -1;
    if (law == "dU") target = &*C.u, k = -2;
    if (law == "dY" || law == "Y2") target = &*C.y, k = 1;
    auto s = fixture::slots(C.mod, k);
    if (s.empty()) continue;
    const auto [t, src] = s[r.uniform(0, static_cast<int>(s.size()) - 1)];
    target->add(t, src, 1);
    C.normalize();
    const auto failed = validate(C).failed();
    const std::set<std::string> got(failed.begin(), failed.end());
    EXPECT_EQ(got, oracle::failing_laws(C)) << "seed " << seed;
    if (got.count(law)) ++caught;
  }
  EXPECT_GT(caught, 0);
}

INSTANTIATE_TEST_SUITE_P(Laws, LawFalsification, ::testing::Values("d2", "dU", "dY", "Y2"),
                         [](const auto& info) { return std::string(info.param); });

TEST(Homology, ZeroDifferentialIsFree) {
  ChainComplex C(GradedModule({{"a", 0}, {"b", 0}, {"c", 3}}));
  const HomologyTable T = homology(C);
  EXPECT_EQ(T.at(0), Zr(2));
  EXPECT_EQ(T.at(3), Zr(1));
  EXPECT_TRUE(T.at(1).trivial());
}

TEST(Homology, MultiplicationByTwo) {
  const HomologyTable T = homology(arrow(2));
  EXPECT_EQ(T.at(0), Zmod(2));
  EXPECT_TRUE(T.at(1).trivial());
}

TEST(Homology, OverF2TheArrowSplits) {
  ChainComplex C = arrow(2);
  C.ring = Ring::F(2);
  C.normalize();
  const HomologyTable T = homology(C);
  EXPECT_EQ(T.at(0), Zr(1));
  EXPECT_EQ(T.at(1), Zr(1));
}

TEST(Homology, WindowMarksEdgesUnsafe) {
  const HomologyTable T = homology(arrow(2), std::pair{-1, 2});
  EXPECT_EQ(T.safe, (std::set<int>{-1, 0, 1, 2}));
}

TEST(Homology, RandomComplexesAgreeWithUniversalCoefficients) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    Rng r(seed);
    const ChainComplex C = random_complex(r, RandomParams{});
    const HomologyTable T = homology(C);
    for (int j = -7; j <= 7; ++j) EXPECT_TRUE(oracle::consistent_integral(T, C, j)) << "seed " << seed << " j " << j;
  }
}

TEST(Homology, InvariantUnderRenamingAndReordering) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Rng r(seed);
    const ChainComplex C = random_complex(r, RandomParams{});
    EXPECT_EQ(homology(C).groups, homology(permuted(C, seed)).groups);
  }
}

TEST(Cone, ZeroMapGivesDirectSum) {
  const ChainComplex A = arrow(2), B = arrow(3);
  const GradedMap f = GradedMap::zero(A.mod, B.mod, -1);
  const HomologyTable T = homology(cone(f, A, B));
  EXPECT_EQ(T.groups, homology(direct_sum(A, B)).groups);
  EXPECT_EQ(T.at(0), Zmod(6));
}

TEST(Cone, IdentityPairingIsAcyclic) {
  ChainComplex A(GradedModule({{"e", 1}})), B(GradedModule({{"e", 0}}));
  GradedMap f(A.mod, B.mod, -1);
  f.add("e", "e", 1);
  EXPECT_TRUE(homology(cone(f, A, B)).groups.empty());
}

TEST(Cone, HomotopicMapsGiveIsomorphicCones) {
  // f = 0 and g = ∂h + h∂ : A → B of degree −1 differ by a homotopy.
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng r(seed);
    const ChainComplex A = random_complex(r, RandomParams{}), B = random_complex(r, RandomParams{});
    GradedMap h(A.mod, B.mod, 0);
    for (const auto& [t, s] : [&] {
           std::vector<std::pair<std::size_t, std::size_t>> out;
           for (std::size_t i = 0; i < A.size(); ++i)
             for (std::size_t j : B.mod.at(A.mod.degree(i))) out.push_back({j, i});
           return out;
         }())
      if (r.coin()) h.m.set(t, s, r.nonzero(2));
    const GradedMap g = B.dmap() * h - h * A.dmap();
    ASSERT_TRUE(is_chain_map(g, A, B));
    EXPECT_EQ(homology(cone(g, A, B)).groups, homology(cone(GradedMap::zero(A.mod, B.mod, -1), A, B)).groups);
  }
}

TEST(Tensor, PointIsAUnit) {
  ChainComplex P(GradedModule({{"e", 0}}));
  const ChainComplex C = arrow(2);
  const TensorProduct T = tensor(P, C);
  EXPECT_EQ(T.complex.mod.name(0), "e#a");
  EXPECT_EQ(homology(T.complex).groups, homology(C).groups);
}

TEST(Tensor, KunnethWithTorsion) {
  // Z/2 ⊗ Z/3 = 0 and Tor(Z/2, Z/3) = 0; Z/2 ⊗ Z/2 = Z/2 in degree 0 and Tor = Z/2 in degree 1.
  ChainComplex A = arrow(2), B = arrow(3);
  A.u.reset();
  B.u.reset();
  EXPECT_TRUE(homology(tensor(A, B).complex).groups.empty());
  const HomologyTable T = homology(tensor(A, A).complex);
  EXPECT_EQ(T.at(0), Zmod(2));
  EXPECT_EQ(T.at(1), Zmod(2));
  EXPECT_TRUE(T.at(2).trivial());
}

TEST(Tensor, KunnethRankIdentityOverF3) {
  RandomParams p;
  p.ring = Ring::F(3);
  p.max_rank = 5;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng r(seed);
    const ChainComplex A = random_complex(r, p), B = random_complex(r, p);
    const ChainComplex T = tensor(A, B).complex;
    ASSERT_TRUE(validate(T).ok());
    const HomologyTable HA = homology(A), HB = homology(B), HT = homology(T);
    for (int n = -12; n <= 12; ++n) {
      std::size_t expect = 0;
      for (const auto& [i, g] : HA.groups) expect += g.free_rank * HB.at(n - i).free_rank;
      EXPECT_EQ(HT.at(n).free_rank, expect) << "seed " << seed << " n " << n;
    }
  }
}

TEST(Tensor, ActionsSatisfyTheirLaws) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng r(seed);
    const ChainComplex A = random_y_complex(r, RandomParams{}), B = random_u_complex(r, RandomParams{});
    const TensorProduct T = tensor(A, B);
    EXPECT_TRUE(validate(T.complex).ok());
    ASSERT_TRUE(T.y_left && T.u_right);
    ChainComplex withY = T.complex;
    withY.y = T.y_left;
    withY.u = T.u_right;
    EXPECT_TRUE(oracle::failing_laws(withY).empty()) << "seed " << seed;
  }
}

TEST(Homotopy, Examples) {
  const ChainComplex Z1 = arrow(1);
  const GradedMap id = GradedMap::identity(Z1.mod), zero = GradedMap::zero(Z1.mod, Z1.mod, 0);
  EXPECT_TRUE(verify_homotopy(id, id, GradedMap::zero(Z1.mod, Z1.mod, 1), Z1, Z1));
  GradedMap K(Z1.mod, Z1.mod, 1);
  K.add("b", "a", 1);
  EXPECT_TRUE(verify_homotopy(id, zero, K, Z1, Z1));

  const ChainComplex Z2 = arrow(2);
  GradedMap K2(Z2.mod, Z2.mod, 1);
  for (long c : {-2L, -1L, 0L, 1L, 2L}) {
    K2.m = IntMatrix(2, 2);
    K2.add("b", "a", c);
    EXPECT_FALSE(verify_homotopy(GradedMap::identity(Z2.mod), GradedMap::zero(Z2.mod, Z2.mod, 0), K2, Z2, Z2));
  }
}

TEST(Induced, IdentityAndZero) {
  ChainComplex C(GradedModule({{"a", 0}, {"b", 1}, {"c", 0}}));
  C.add_d("b", "a", 3);
  const std::set<int> degs{0, 1};
  InducedMap I = induced_on_homology(GradedMap::identity(C.mod), C, C, degs);
  EXPECT_TRUE(I.by_degree.at(0).iso);
  EXPECT_TRUE(I.by_degree.at(1).iso);
  InducedMap Z = induced_on_homology(GradedMap::zero(C.mod, C.mod, 0), C, C, degs);
  EXPECT_TRUE(Z.by_degree.at(0).zero);
  EXPECT_FALSE(Z.by_degree.at(0).iso);
  EXPECT_TRUE(Z.by_degree.at(1).iso);  // H_1 = 0 on both sides
}

TEST(Induced, RespectsComposition) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng r(seed);
    const Composable c = random_composable(r, RandomParams{});
    std::set<int> degs;
    for (int j = -8; j <= 8; ++j) degs.insert(j);
    std::set<int> mid, last;
    for (int j : degs) mid.insert(j + c.f.phi.degree), last.insert(j + c.f.phi.degree + c.g.phi.degree);
    const HomologyPresentation PA = present(c.a, degs), PB = present(c.b, mid), PC = present(c.c, last);
    const InducedMap F = induced_on_homology(c.f.phi, c.a, c.b, PA, PB, degs);
    const InducedMap G = induced_on_homology(c.g.phi, c.b, c.c, PB, PC, mid);
    const InducedMap GF = induced_on_homology(c.g.phi * c.f.phi, c.a, c.c, PA, PC, degs);
    for (int j : degs) {
      const int t = j + c.f.phi.degree + c.g.phi.degree;
      const IntMatrix diff = GF.by_degree.at(j).matrix - G.by_degree.at(j + c.f.phi.degree).matrix * F.by_degree.at(j).matrix;
      EXPECT_TRUE(hom_is_zero(diff, PC.at(t).orders, c.c.ring)) << "seed " << seed << " degree " << j;
    }
  }
}

TEST(ExactSequences, IdentityAndSplitSequences) {
  const ChainComplex C = arrow(2), D = arrow(3);
  const ChainComplex zero(GradedModule{});
  const std::set<int> degs{-1, 0, 1, 2};
  MapSequence s{{zero, C, C, zero},
                {GradedMap::zero(zero.mod, C.mod, 0), GradedMap::identity(C.mod),
                 GradedMap::zero(C.mod, zero.mod, 0)}};
  EXPECT_TRUE(verify_exact_at(s, 1, degs));
  EXPECT_TRUE(verify_exact_at(s, 2, degs));

  const ChainComplex S = direct_sum(C, D);
  GradedMap inc(C.mod, S.mod, 0), proj(S.mod, D.mod, 0);
  for (const auto& g : C.mod.gens()) inc.add(g.name, "0:" + g.name, 1);
  for (const auto& g : D.mod.gens()) proj.add("1:" + g.name, g.name, 1);
  MapSequence split{{zero, C, S, D, zero},
                    {GradedMap::zero(zero.mod, C.mod, 0), inc, proj, GradedMap::zero(D.mod, zero.mod, 0)}};
  for (std::size_t pos = 1; pos <= 3; ++pos) EXPECT_TRUE(verify_exact_at(split, pos, degs));

  // swapping in the identity on the sum breaks exactness in the middle
  MapSequence broken = split;
  broken.maps[1] = GradedMap::zero(C.mod, S.mod, 0);
  EXPECT_FALSE(verify_exact_at(broken, 2, degs));
}

TEST(ExactSequences, ConeSequenceOfRandomMaps) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Rng r(seed);
    const Composable c = random_composable(r, RandomParams{});
    // the cone wants a degree −1 map; precompose the degree shift by renaming
    const GradedMap& f = c.f.phi;
    const ChainComplex A = c.a, B = c.b;
    ChainComplex As(A.mod.shifted(f.degree + 1), A.ring);
    As.d = A.d.scaled((f.degree + 1) % 2 ? -1 : 1);
    const GradedMap fs(As.mod, B.mod, -1, f.m);
    ASSERT_TRUE(is_chain_map(fs, As, B));
    const ChainComplex K = cone(fs, As, B);
    GradedMap inc(B.mod, K.mod, 0), proj(K.mod, As.mod, 0);
    for (const auto& g : B.mod.gens()) inc.add(g.name, "1:" + g.name, 1);
    for (const auto& g : As.mod.gens()) proj.add("0:" + g.name, g.name, 1);
    const LesCertificate cert = certify_les({"cone", B, K, As, inc, proj}, -8, 8);
    EXPECT_TRUE(cert.ok()) << "seed " << seed;
    EXPECT_GT(cert.safe_nodes(), 0u);
  }
}
