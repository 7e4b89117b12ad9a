#include "crg/serialize.hpp"

namespace crg {

namespace {

json scalar_list(const std::vector<ParamScalar>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_text(x));
  return out;
}

json vector_list(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

json optional_count(const std::optional<std::uint64_t>& x) {
  return x ? json(*x) : json(nullptr);
}

}  // namespace

json to_json(const Vector& v) {
  json out = json::array();
  for (std::size_t j = 0; j < v.size(); ++j) out.push_back(to_text(v[j]));
  return out;
}

json to_json(const MonomialMatrix& m) {
  json perm = json::array();
  for (int p : m.perm()) perm.push_back(p + 1);
  return {{"perm", perm}, {"exponents", m.exps()}, {"text", to_text(m)}};
}

json to_json(const AffineMap& g) {
  return {{"linear", to_json(g.lin)}, {"translation", to_json(g.tran)}, {"text", to_text(g)}};
}

json to_json(const AffineSubspace& a) {
  if (a.empty) return {{"empty", true}};
  return {{"empty", false},
          {"dimension", a.dimension()},
          {"base", to_json(a.base)},
          {"directions", vector_list(a.directions)}};
}

json to_json(const ScalarModule& m) { return scalar_list(m.generators()); }

json to_json(const Lattice& l) {
  json gens = json::array();
  for (const auto& g : l.generators()) {
    gens.push_back({{"vector", to_json(g.v)}, {"coefficients", to_text(g.coeffs)}});
  }
  return {{"dimension", l.dim()},
          {"r", l.ring().r()},
          {"rank", l.rank()},
          {"generators", gens},
          {"zbasis", vector_list(l.zbasis())}};
}

json to_json(const GroupSpec& w) {
  json gens = json::array();
  for (const auto& g : w.linear_generators) gens.push_back(to_json(g));
  json out = {{"id", w.id.name()},
              {"genuine", w.id.genuine},
              {"r", w.r()},
              {"p", w.p()},
              {"n", w.n()},
              {"k", w.id.k},
              {"lattice", to_json(w.lattice)},
              {"linear_generators", gens},
              {"expected_steinberg", w.expected_steinberg},
              {"counterexample", nullptr}};
  if (w.counterexample) out["counterexample"] = to_json(*w.counterexample);
  return out;
}

json to_json(const Witness& w) {
  return {{"form", to_text(w.form)},
          {"constant", to_text(w.constant)},
          {"family", w.family},
          {"branch", w.branch},
          {"reflection", to_json(w.reflection)}};
}

json to_json(const ElementVerdict& v) {
  return {{"element", to_json(v.element)},
          {"outcome", to_string(v.outcome)},
          {"fixed", to_json(v.fixed)},
          {"witness", v.witness ? to_json(*v.witness) : json(nullptr)}};
}

json to_json(const Rank1Window& w) {
  json lat = json::array();
  json hyp = json::array();
  for (const auto& z : w.lattice_points) lat.push_back(to_text(z));
  for (const auto& z : w.hyperplane_points) hyp.push_back(to_text(z));
  return {{"radius", to_text(w.radius)}, {"lattice_points", lat}, {"hyperplane_points", hyp}};
}

json to_json(const SweepReport& s) {
  json viol = json::array();
  for (const auto& v : s.violations) viol.push_back(to_json(v));
  return {{"id", s.id.name()},
          {"bound", s.bound},
          {"budget", optional_count(s.budget)},
          {"exhaustive", s.exhaustive},
          {"linear_parts", s.linear_parts},
          {"lattice_rank", s.lattice_rank},
          {"grid_size", static_cast<double>(s.grid_size)},
          {"examined", s.examined},
          {"skipped_identity", s.skipped_identity},
          {"no_fixed_point", s.no_fixed_point},
          {"reflection_powers", s.reflection_powers},
          {"on_hyperplane", s.on_hyperplane},
          {"violation_count", s.violation_count},
          {"violations", viol},
          {"witness_fired", s.witness_fired},
          {"witness_disagreements", s.witness_disagreements},
          {"seconds", s.seconds}};
}

json to_json(const CounterexampleReport& c) {
  return {{"id", c.id.name()},
          {"element", to_json(c.element)},
          {"member", c.member},
          {"fixed", to_json(c.fixed)},
          {"off_arrangement", c.off_arrangement},
          {"orbit_check_applies", c.orbit_check_applies},
          {"orbit_inequivalent", c.orbit_inequivalent},
          {"passed", c.passed},
          {"seconds", c.seconds}};
}

json to_json(const TableRow& row) {
  json sweeps = json::array();
  for (const auto& s : row.sweeps) sweeps.push_back(to_json(s));
  return {{"id", row.id.name()},
          {"extension", row.extension},
          {"expected", to_string(row.expected)},
          {"computed", to_string(row.computed)},
          {"method", row.method},
          {"mismatch", row.mismatch()},
          {"sweeps", sweeps},
          {"certificate", row.certificate ? to_json(*row.certificate) : json(nullptr)},
          {"error", row.error}};
}

json to_json(const TableReport& t) {
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back(to_json(r));
  return {{"rows", rows},
          {"mismatches", t.mismatches()},
          {"witness_fired", t.witness_fired},
          {"witness_disagreements", t.witness_disagreements},
          {"seconds", t.seconds}};
}

json families_json(const Arrangement& arr) {
  json out = json::array();
  for (const auto& fam : arr.families()) {
    json branches = json::array();
    for (const auto& br : fam.branches) {
      branches.push_back({{"eigenvalue", to_text(br.eigenvalue)}, {"constants", to_json(br.constants)}});
    }
    out.push_back({{"form", to_text(fam.form)}, {"branches", branches}});
  }
  return out;
}

json catalog_json() {
  json groups = json::array();
  for (const auto& id : catalog_rows()) groups.push_back(to_json(build_group(id)));
  return {{"groups", groups}};
}

AffineMap affine_map_from_json(RingTag ring, const json& j) {
  try {
    const json& lin = j.at("linear");
    std::vector<int> perm;
    for (const auto& p : lin.at("perm")) perm.push_back(p.get<int>() - 1);
    std::vector<int> exps = lin.at("exponents").get<std::vector<int>>();
    const json& tr = j.at("translation");
    CRG_CHECK(perm.size() == exps.size() && perm.size() == tr.size(), Errc::ParseError,
              "affine map sizes differ");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
      CRG_CHECK(p >= 0 && static_cast<std::size_t>(p) < perm.size() && !seen[p], Errc::ParseError,
                "perm is not a permutation");
      seen[p] = true;
    }
    Vector t(ring, perm.size());
    for (std::size_t i = 0; i < tr.size(); ++i) t[i] = parse_scalar(ring, tr[i].get<std::string>());
    return {MonomialMatrix(ring, std::move(perm), std::move(exps)), std::move(t)};
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace crg
