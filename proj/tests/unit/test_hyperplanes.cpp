#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>

#include "crg/svg.hpp"
#include "test_util.hpp"

using namespace crg;
using crg::fixture::S;
using crg::fixture::V;

namespace {

GroupSpec group(std::string_view id) { return build_group(parse_group_id(id)); }

ScalarModule module(int r, std::initializer_list<std::string_view> gens) {
  std::vector<ParamScalar> xs;
  for (auto g : gens) xs.push_back(S(r, g));
  return ScalarModule(RingTag(r), xs);
}

// Independent box test: Re and Im of a + b xi against R.
bool box_oracle(const CycloScalar& z, const Rational& radius) {
  Rational re = z.a();
  Rational im2 = 0;  // 4/3 * Im^2 for r = 3, 6; Im^2 for r = 4
  switch (z.ring().r()) {
    case 4:
      return std::max(z.a(), -z.a()) <= radius && std::max(z.b(), -z.b()) <= radius;
    case 3: re = z.a() - Rational(1, 2) * z.b(); break;
    case 6: re = z.a() + Rational(1, 2) * z.b(); break;
    default: return std::max(z.a(), -z.a()) <= radius;
  }
  im2 = Rational(3, 4) * z.b() * z.b();
  return std::max(re, -re) <= radius && im2 <= radius * radius;
}

std::vector<CycloScalar> sorted(std::vector<CycloScalar> v) {
  std::sort(v.begin(), v.end(), [](const CycloScalar& x, const CycloScalar& y) {
    return scalar_less(ParamScalar(x), ParamScalar(y));
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Points q (x + y w) with w = omega (r = 3, 6) or i, restricted to the box.
std::vector<CycloScalar> scaled_points(int r, const CycloScalar& q, const Rational& radius) {
  const RingTag ring(r);
  const CycloScalar w = r == 6 ? root_of_unity(ring, 2) : root_of_unity(ring, 1);
  std::vector<CycloScalar> out;
  for (long x = -12; x <= 12; ++x) {
    for (long y = -12; y <= 12; ++y) {
      const CycloScalar z = q * (CycloScalar(ring, x) + Rational(y) * w);
      if (box_oracle(z, radius)) out.push_back(z);
    }
  }
  return sorted(out);
}

TEST(Rank1, GaussianHalfLattice) {
  const Rank1Window win = rank1_window(group("[G(4,1,1)]_1"), Rational(3));
  EXPECT_EQ(win.hyperplane_points, scaled_points(4, CycloScalar(RingTag(4), Rational(1, 2)), 3));
  EXPECT_EQ(win.hyperplane_points.size(), 13u * 13u);
  EXPECT_EQ(win.lattice_points, scaled_points(4, CycloScalar::one(RingTag(4)), 3));
  EXPECT_EQ(win.lattice_points.size(), 7u * 7u);
}

TEST(Rank1, EisensteinUnion) {
  const RingTag ring(6);
  const Rational R(3);
  const Rank1Window win = rank1_window(group("[G(6,1,1)]_1"), R);
  auto expected = scaled_points(6, (CycloScalar::one(ring) - root_of_unity(ring, 2)).inverse(), R);
  const auto halves = scaled_points(6, CycloScalar(ring, Rational(1, 2)), R);
  expected.insert(expected.end(), halves.begin(), halves.end());
  EXPECT_EQ(win.hyperplane_points, sorted(expected));
}

TEST(Rank1, SmallWindows) {
  const Rank1Window one = rank1_window(group("[G(4,1,1)]_1"), Rational(1));
  EXPECT_EQ(one.hyperplane_points.size(), 25u);
  const Rank1Window zero = rank1_window(group("[G(4,1,1)]_1"), Rational(0));
  ASSERT_EQ(zero.hyperplane_points.size(), 1u);
  EXPECT_TRUE(zero.hyperplane_points[0].is_zero());
  EXPECT_EQ(zero.lattice_points.size(), 1u);
}

TEST(Rank1, NotRankOne) {
  try {
    rank1_window(group("[G(4,1,2)]_1"), Rational(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotRankOne);
  }
}

TEST(Families, G622SecondMatchesList) {
  const Arrangement arr(group("[G(6,2,2)]_2"));
  const ScalarModule eisenstein = module(6, {"1", "x"});
  const ScalarModule scaled = eisenstein.scaled(CycloScalar(RingTag(6), 2, -1));  // 1 - omega = 2 - xi
  int coordinate = 0;
  int difference = 0;
  for (const auto& fam : arr.families()) {
    if (fam.form.kind == LinearForm::Kind::Coordinate) {
      ++coordinate;
      for (const auto& br : fam.branches) EXPECT_EQ(br.constants, eisenstein) << to_text(fam.form);
    } else {
      ++difference;
      ASSERT_EQ(fam.branches.size(), 1u);
      const ScalarModule& c = fam.branches[0].constants;
      EXPECT_TRUE(c.includes(fam.form.m % 2 ? eisenstein : scaled)) << to_text(fam.form);
      EXPECT_TRUE((fam.form.m % 2 ? eisenstein : scaled).includes(c)) << to_text(fam.form);
    }
  }
  EXPECT_EQ(coordinate, 2);
  EXPECT_EQ(difference, 6);
}

TEST(PointOn, Examples) {
  const GroupSpec w = group("[G(4,2,2)]_1");
  const auto origin = point_on_arrangement(w, Vector(RingTag(4), 2));
  ASSERT_TRUE(origin.has_value());
  EXPECT_TRUE(origin->constant.is_zero());

  EXPECT_FALSE(point_on_arrangement(group("[G(6,3,2)]_2"), V(6, {"1/2", "-1 + 1/2*x"})).has_value());

  const ParamScalar c = S(3, "1 - x").inverse();
  EXPECT_FALSE(point_on_arrangement(group("[G(3,3,3)]_1"), Vector(RingTag(3), {c, -c, ParamScalar(RingTag(3))}))
                   .has_value());
}

TEST(SubspaceOn, Examples) {
  const GroupSpec w = group("[G(4,1,1)]_1");
  AffineSubspace pt;
  pt.empty = false;
  pt.base = V(4, {"1/2 + 3/2*x"});
  EXPECT_TRUE(subspace_on_arrangement(w, pt).has_value());

  const GroupSpec w2 = group("[G(4,1,2)]_2");
  const AffineSubspace all = fixed_space(AffineMap::identity(RingTag(4), 2));
  EXPECT_FALSE(subspace_on_arrangement(w2, all).has_value());

  const AffineMap s{fixture::M(4, {1, 0}, {3, 1}), Vector(RingTag(4), 2)};
  ASSERT_TRUE(is_member(w2, s));
  const auto wit = subspace_on_arrangement(w2, fixed_space(s));
  ASSERT_TRUE(wit.has_value());
  EXPECT_TRUE(subspace_satisfies_form(fixed_space(s), wit->form, wit->constant));

  try {
    subspace_on_arrangement(w2, AffineSubspace{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptySubspace);
  }
}

TEST(WitnessReflection, CoordinateHalf) {
  const GroupSpec w = group("[G(4,1,1)]_1");
  const Arrangement arr(w);
  const auto idx = arr.find_family(LinearForm::coordinate(0));
  ASSERT_TRUE(idx.has_value());
  // branch with eigenvalue -1
  std::size_t b = 0;
  while (!(arr.families()[*idx].branches[b].eigenvalue == CycloScalar(RingTag(4), -1))) ++b;
  const AffineMap s = arr.witness_reflection(*idx, b, S(4, "1/2"));
  EXPECT_EQ(s.lin, MonomialMatrix::diagonal(RingTag(4), {2}));
  EXPECT_EQ(s.tran, V(4, {"1"}));
}

TEST(WitnessReflection, AlphaSum) {
  const GroupSpec w = group("[G(2,2,3)]^a_1");
  const Arrangement arr(w);
  // x1 + x2 is x1 - xi x2 for r = 2
  const auto idx = arr.find_family(LinearForm::difference(0, 1, 1));
  ASSERT_TRUE(idx.has_value());
  const ScalarModule& consts = arr.families()[*idx].branches[0].constants;
  ASSERT_FALSE(consts.is_zero());
  for (const auto& beta : consts.generators()) {
    const AffineMap s = witness_reflection(w, arr.families()[*idx], beta);
    EXPECT_EQ(s.lin, fixture::M(2, {1, 0, 2}, {1, 1, 0}));
    EXPECT_EQ(s.tran, Vector(RingTag(2), {beta, beta, ParamScalar(RingTag(2))}));
    EXPECT_TRUE(is_member(w, s));
    EXPECT_TRUE(is_reflection(s));
  }
  try {
    witness_reflection(w, arr.families()[*idx], S(2, "1/7"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ConstantNotAdmissible);
  }
}

TEST(Svg, WindowGeometry) {
  const std::string svg = render_svg(rank1_window(group("[G(4,1,1)]_1"), Rational(1)));
  EXPECT_NE(svg.find("viewBox=\"-150.000 -150.000 300.000 300.000\""), std::string::npos);
  auto count = [&svg](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count("class=\"lattice\""), 9u);
  EXPECT_EQ(count("class=\"hyperplane\""), 25u);
  EXPECT_EQ(count("r=\"5\""), 9u);
  EXPECT_EQ(count("r=\"2\""), 25u);
}

class ArrangementRows : public ::testing::TestWithParam<GroupId> {};

// Every reflection of the group with small translation lies on a family, and
// the witness produced for its mirror is a reflection of the group.
TEST_P(ArrangementRows, BruteForceCompleteness) {
  const GroupSpec w = build_group(GetParam());
  const Arrangement arr(w);
  const auto lin = enumerate_linear_group(w.r(), w.p(), static_cast<int>(w.n()));
  const std::size_t rank = w.lattice.rank();
  const long bound = rank <= 4 ? 2 : 1;
  std::vector<long> coeffs(rank, -bound);
  std::size_t reflections = 0;
  for (;;) {
    const Vector t = fixture::lattice_point(w.lattice, coeffs);
    for (const auto& m : lin) {
      if (!is_central_reflection(m)) continue;
      const AffineMap s{m, t};
      const AffineSubspace h = fixed_space(s);
      if (h.empty) continue;
      ++reflections;
      const auto wit = arr.subspace_on(h);
      ASSERT_TRUE(wit.has_value()) << to_text(s);
      EXPECT_TRUE(subspace_satisfies_form(h, wit->form, wit->constant));
      EXPECT_TRUE(is_member(w, wit->reflection));
      EXPECT_TRUE(is_reflection(wit->reflection));
      // the witness mirror is the same hyperplane
      EXPECT_EQ(fixed_space(wit->reflection).dimension(), h.dimension());
      EXPECT_TRUE(contains_point(fixed_space(wit->reflection), h.base));
    }
    std::size_t i = 0;
    while (i < rank && coeffs[i] == bound) coeffs[i++] = -bound;
    if (i == rank) break;
    ++coeffs[i];
  }
  EXPECT_GT(reflections, 0u);
}

TEST_P(ArrangementRows, FamilyConstantsAdmitWitnesses) {
  const GroupSpec w = build_group(GetParam());
  const Arrangement arr(w);
  for (std::size_t f = 0; f < arr.families().size(); ++f) {
    const auto& fam = arr.families()[f];
    for (std::size_t b = 0; b < fam.branches.size(); ++b) {
      for (const auto& c : fam.branches[b].constants.generators()) {
        const AffineMap s = arr.witness_reflection(f, b, c);
        EXPECT_TRUE(is_member(w, s)) << to_text(fam.form) << " " << to_text(c);
        EXPECT_TRUE(is_reflection(s));
        EXPECT_TRUE(subspace_satisfies_form(fixed_space(s), fam.form, c));
      }
    }
  }
}

TEST_P(ArrangementRows, DifferenceModulesStableUnderXi) {
  const GroupSpec w = build_group(GetParam());
  const Arrangement arr(w);
  if (!arr.fully_invariant() || w.ring.r() < 3) return;
  const CycloScalar xi = root_of_unity(w.ring, 1);
  for (const auto& fam : arr.families()) {
    for (const auto& br : fam.branches) EXPECT_EQ(br.constants.scaled(xi), br.constants) << to_text(fam.form);
  }
}

std::vector<GroupId> small_rows() {
  std::vector<GroupId> out;
  for (const auto& id : catalog_rows()) {
    if (id.n <= 2) out.push_back(id);
  }
  return out;
}

std::string row_name(const ::testing::TestParamInfo<GroupId>& info) {
  std::string s;
  for (char ch : info.param.name()) s += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return s;
}

INSTANTIATE_TEST_SUITE_P(SmallRank, ArrangementRows, ::testing::ValuesIn(small_rows()), row_name);

}  // namespace
