#include <gtest/gtest.h>

#include "crg/serialize.hpp"
#include "test_util.hpp"

using namespace crg;
using crg::fixture::V;

namespace {

TEST(Json, AffineMapRoundTrip) {
  std::mt19937_64 rng(4);
  for (int r : {2, 3, 4, 6}) {
    const RingTag ring(r);
    for (int i = 0; i < 30; ++i) {
      const std::size_t n = 1 + i % 4;
      Vector t(ring, n);
      for (std::size_t j = 0; j < n; ++j) t[j] = fixture::random_param(rng, ring, i % 2 == 0);
      const AffineMap g{fixture::random_monomial(rng, ring, n), t};
      const json j = to_json(g);
      EXPECT_EQ(affine_map_from_json(ring, json::parse(j.dump())), g);
    }
  }
}

TEST(Json, AffineMapParseErrors) {
  const json bad_perm = {{"linear", {{"perm", {1, 1}}, {"exponents", {0, 0}}}}, {"translation", {"0", "0"}}};
  const json missing = {{"translation", {"0"}}};
  for (const auto& j : {bad_perm, missing}) {
    try {
      affine_map_from_json(RingTag(4), j);
      FAIL() << j.dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError);
    }
  }
}

TEST(Json, GroupSpec) {
  const GroupSpec w = build_group(parse_group_id("[G(6,3,2)]_2"));
  const json j = to_json(w);
  EXPECT_EQ(j["id"], "[G(6,3,2)]_2");
  EXPECT_EQ(j["expected_steinberg"], false);
  EXPECT_EQ(j["lattice"]["rank"], 4);
  EXPECT_EQ(j["lattice"]["zbasis"].size(), 4u);
  EXPECT_EQ(j["linear_generators"].size(), 3u);
  EXPECT_EQ(affine_map_from_json(w.ring, j["counterexample"]), *w.counterexample);
  EXPECT_EQ(j["counterexample"]["translation"], json({"1", "-2 + x"}));
}

TEST(Json, Families) {
  const Arrangement arr(build_group(parse_group_id("[G(4,1,1)]_1")));
  const json j = families_json(arr);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["form"], "x1");
  EXPECT_EQ(j[0]["branches"].size(), 3u);
  for (const auto& br : j[0]["branches"]) EXPECT_EQ(br["constants"].size(), 2u);
}

TEST(Json, SweepReport) {
  SweepOptions opts;
  opts.budget = 200;
  const SweepReport s = sweep(Arrangement(build_group(parse_group_id("[G(3,1,2)]_2"))), opts);
  const json j = to_json(s);
  EXPECT_EQ(j["exhaustive"], false);
  EXPECT_EQ(j["budget"], 200);
  EXPECT_EQ(j["violation_count"], s.violation_count);
  EXPECT_EQ(j["violations"].size(), s.violations.size());
  for (const auto& v : j["violations"]) {
    EXPECT_EQ(v["outcome"], "VIOLATION");
    EXPECT_TRUE(v["witness"].is_null());
    EXPECT_FALSE(v["fixed"]["empty"].get<bool>());
  }
}

TEST(Json, Catalog) {
  const json j = catalog_json();
  EXPECT_EQ(j["groups"].size(), catalog_rows().size());
  for (const auto& g : j["groups"]) {
    EXPECT_EQ(g["counterexample"].is_null(), g["expected_steinberg"].get<bool>());
  }
}

}  // namespace
