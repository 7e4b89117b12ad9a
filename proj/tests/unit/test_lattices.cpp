#include <gtest/gtest.h>

#include <cctype>

#include "test_util.hpp"

using namespace crg;
using crg::fixture::M;
using crg::fixture::S;
using crg::fixture::V;

namespace {

Lattice lattice_of(std::string_view id) { return build_group(parse_group_id(id)).lattice; }

ScalarModule module(int r, std::initializer_list<std::string_view> gens) {
  std::vector<ParamScalar> xs;
  for (auto g : gens) xs.push_back(S(r, g));
  return ScalarModule(RingTag(r), xs);
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  for (const auto& v : a.zbasis()) {
    if (!b.contains(v)) return false;
  }
  for (const auto& v : b.zbasis()) {
    if (!a.contains(v)) return false;
  }
  return true;
}

TEST(LatticeFromGenerators, G412First) {
  const RingTag ring(4);
  const Lattice l = lattice_from_generators(
      2, ring, {{V(4, {"1", "0"}), CoeffRing::Zxi}, {V(4, {"1", "-1"}), CoeffRing::Zxi}}, 4);
  EXPECT_EQ(l.rank(), 4u);
  EXPECT_TRUE(same_lattice(l, lattice_of("[G(4,1,2)]_1")));
}

TEST(LatticeFromGenerators, G632Second) {
  const Lattice l = lattice_from_generators(
      2, RingTag(6), {{V(6, {"x", "-1"}), CoeffRing::Z2xi}, {V(6, {"1 - x", "-1 + x"}), CoeffRing::Z2xi}}, 4);
  EXPECT_EQ(l.rank(), 4u);
  EXPECT_TRUE(same_lattice(l, lattice_of("[G(6,3,2)]_2")));
  EXPECT_TRUE(l.contains(V(6, {"x", "-1"})));
  EXPECT_TRUE(l.contains(V(6, {"-2 + 2*x", "-2*x"})));
}

TEST(LatticeFromGenerators, RankDeficient) {
  try {
    lattice_from_generators(1, RingTag(2), {{V(2, {"1"}), CoeffRing::Zxi}, {V(2, {"2"}), CoeffRing::Zxi}}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RankDeficient);
  }
}

TEST(LatticeContains, Examples) {
  const Lattice l = lattice_of("[G(3,1,2)]_2");
  const ParamScalar c = S(3, "1 - x").inverse();
  EXPECT_TRUE(l.contains(Vector(RingTag(3), {c, -c})));
  EXPECT_TRUE(l.contains(Vector(RingTag(3), 2)));
  EXPECT_FALSE(l.contains(V(3, {"1/2", "0"})));
  try {
    l.contains(Vector(RingTag(3), 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(LatticeContains, IntegerCoordinates) {
  const Lattice l = lattice_of("[G(6,2,2)]_2");
  const Vector v = fixture::lattice_point(l, {1, -2, 0, 3});
  const auto coords = l.coordinates(v);
  ASSERT_TRUE(coords.has_value());
  EXPECT_EQ(*coords, (std::vector<mpz_class>{1, -2, 0, 3}));
  EXPECT_FALSE(l.coordinates(V(6, {"1/5", "0"})).has_value());
}

TEST(LatticeInvariance, G632UnderItsGenerators) {
  const Lattice l = lattice_of("[G(6,3,2)]_2");
  const MonomialMatrix swap = M(6, {1, 0}, {0, 0});
  const MonomialMatrix d = MonomialMatrix::diagonal(RingTag(6), {3, 0});
  const MonomialMatrix wt = M(6, {1, 0}, {-1, 1});  // (0 xi; xi^-1 0)
  for (const auto& g : {swap, d, wt}) EXPECT_TRUE(l.is_invariant(g)) << to_text(g);
  // diag(xi, 1) is outside G(6,3,2) and does not preserve the lattice
  EXPECT_FALSE(l.is_invariant(MonomialMatrix::diagonal(RingTag(6), {1, 0})));
}

TEST(LatticeInvariance, FullMonomialGroupOnR6) {
  const auto group = enumerate_linear_group(6, 1, 2);
  for (int p : {1, 2, 3}) {
    const Lattice l = build_group(genuine_id(6, p, 2, 1)).lattice;
    for (const auto& g : group) EXPECT_TRUE(l.is_invariant(g)) << p << " " << to_text(g);
  }
}

TEST(LatticeInvariance, RingMismatch) {
  const Lattice l = lattice_from_generators(
      2, RingTag(3), {{V(3, {"1", "0"}), CoeffRing::Zxi}, {V(3, {"0", "1"}), CoeffRing::Zxi}}, 4);
  const MonomialMatrix m = MonomialMatrix::diagonal(RingTag(4), {1, 0});
  try {
    EXPECT_FALSE(l.is_invariant(m));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RingMismatch);
  }
}

TEST(LineIntersection, Examples) {
  EXPECT_EQ(lattice_of("[G(4,1,2)]_2").line_intersection(V(4, {"1", "-1"})),
            module(4, {"1/2 + 1/2*x", "-1/2 + 1/2*x"}));
  EXPECT_EQ(lattice_of("[G(4,1,2)]_1").line_intersection(V(4, {"1", "0"})), module(4, {"1", "x"}));
  // the root lattice of A2 lies in x1 + x2 + x3 = 0
  EXPECT_TRUE(lattice_of("[W(A2)]^a_1").line_intersection(V(1, {"1", "0", "0"})).is_zero());
  try {
    lattice_of("[G(4,1,2)]_1").line_intersection(Vector(RingTag(4), 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroDirection);
  }
}

TEST(ModuleContains, Eisenstein) {
  const ScalarModule z = module(3, {"1", "x"});
  EXPECT_TRUE(module_contains(z, S(3, "2 + x")));
  const ScalarModule m = z.scaled(CycloScalar(RingTag(3), 1, -1));
  EXPECT_FALSE(module_contains(m, S(3, "1")));
  EXPECT_TRUE(module_contains(m, S(3, "1 + 2*x")));
  // a + b w with a + b = 0 mod 3
  for (int a = -4; a <= 4; ++a) {
    for (int b = -4; b <= 4; ++b) {
      EXPECT_EQ(module_contains(m, CycloScalar(RingTag(3), a, b)), (a + b) % 3 == 0) << a << " " << b;
    }
  }
}

TEST(ModuleContains, ZeroModule) {
  const ScalarModule z(RingTag(4));
  EXPECT_TRUE(z.contains(S(4, "0")));
  EXPECT_FALSE(z.contains(S(4, "1")));
  EXPECT_TRUE(ScalarModule().contains(ParamScalar()));
}

class LatticeRows : public ::testing::TestWithParam<GroupId> {};

TEST_P(LatticeRows, ClosureOnSamples) {
  const Lattice l = build_group(GetParam()).lattice;
  EXPECT_EQ(l.rank(), GetParam().weyl_a ? 2 * (l.dim() - 1) : 2 * l.dim());
  std::mt19937_64 rng(l.rank());
  for (const auto& b : l.zbasis()) EXPECT_TRUE(l.contains(b));
  for (int i = 0; i < 20; ++i) {
    const Vector x = fixture::random_lattice_point(rng, l, 3);
    const Vector y = fixture::random_lattice_point(rng, l, 3);
    EXPECT_TRUE(l.contains(x + y));
    EXPECT_TRUE(l.contains(-x));
  }
}

TEST_P(LatticeRows, LineIntersectionSoundAndComplete) {
  const GroupSpec w = build_group(GetParam());
  const Lattice& l = w.lattice;
  const RingTag ring = w.ring;
  const std::size_t n = l.dim();
  std::vector<Vector> dirs;
  if (!GetParam().weyl_a) dirs.push_back(Vector::unit(ring, n, 0));
  if (n >= 2) {
    for (int m = 0; m < std::max(1, ring.r()); ++m) {
      Vector d = Vector::unit(ring, n, 0);
      d[1] = -ParamScalar(root_of_unity(ring, -m));
      dirs.push_back(d);
    }
  }
  for (const auto& d : dirs) {
    const ScalarModule mod = l.line_intersection(d);
    for (const auto& t : mod.generators()) EXPECT_TRUE(l.contains(t * d));
    // brute force over small sixths, including alpha parts for alpha lattices
    const int bound = 4;
    for (int a = -bound; a <= bound; ++a) {
      for (int b = -bound; b <= bound; ++b) {
        if (!ring.has_xi() && b != 0) continue;
        for (int c = l.uses_alpha() ? -2 : 0; c <= (l.uses_alpha() ? 2 : 0); ++c) {
          const ParamScalar x(CycloScalar(ring, Rational(a, 6), Rational(b, 6)),
                              CycloScalar(ring, Rational(c, 6), Rational(0)));
          EXPECT_EQ(l.contains(x * d), mod.contains(x)) << to_text(x) << " on " << to_text(d);
        }
      }
    }
  }
}

std::string row_name(const ::testing::TestParamInfo<GroupId>& info) {
  std::string s;
  for (char ch : info.param.name()) s += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return s;
}

INSTANTIATE_TEST_SUITE_P(Catalog, LatticeRows, ::testing::ValuesIn(catalog_rows()), row_name);

}  // namespace
