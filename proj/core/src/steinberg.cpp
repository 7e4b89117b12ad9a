#include "crg/steinberg.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace crg {

// ---------------------------------------------------------------- orbits

std::optional<int> orbit_equiv(int r, const ScalarModule& module, const ParamScalar& z,
                               const ParamScalar& w) {
  const RingTag ring = module.ring();
  CRG_CHECK(ring.r() == r || (r <= 2 && !ring.has_xi()), Errc::RingMismatch,
            "orbit order does not match the module's ring");
  for (int m = 0; m < r; ++m) {
    if (module.contains(z - root_of_unity(ring, m) * w)) return m;
  }
  return std::nullopt;
}

std::optional<int> orbit_equiv(const OrbitQuery& q) { return orbit_equiv(q.r, q.module, q.z, q.w); }

std::vector<std::vector<std::size_t>> orbit_classes(int r, const ScalarModule& module,
                                                    const std::vector<ParamScalar>& points) {
  std::vector<std::size_t> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const std::size_t a = find(i), b = find(j);
      if (a == b) continue;
      if (orbit_equiv(r, module, points[i], points[j])) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<long> slot(points.size(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(classes.size());
      classes.emplace_back();
    }
    classes[slot[root]].push_back(i);
  }
  return classes;
}

// ---------------------------------------------------------------- witnesses

namespace {

std::optional<Witness> try_family(const Arrangement& arr, const LinearForm& form, const ParamScalar& c) {
  const auto idx = arr.find_family(form);
  if (!idx) return std::nullopt;
  const auto& fam = arr.families()[*idx];
  for (std::size_t b = 0; b < fam.branches.size(); ++b) {
    if (fam.branches[b].constants.contains(c)) {
      return Witness{arr.witness_reflection(*idx, b, c), *idx, b, form, c};
    }
  }
  return std::nullopt;
}

std::optional<Witness> try_coordinate(const Arrangement& arr, int j, const CycloScalar& lambda,
                                      const ParamScalar& c) {
  const auto idx = arr.find_family(LinearForm::coordinate(j));
  if (!idx) return std::nullopt;
  const auto& fam = arr.families()[*idx];
  for (std::size_t b = 0; b < fam.branches.size(); ++b) {
    if (fam.branches[b].eigenvalue == lambda && fam.branches[b].constants.contains(c)) {
      return Witness{arr.witness_reflection(*idx, b, c), *idx, b, fam.form, c};
    }
  }
  return std::nullopt;
}

int mod_r(long e, int r) {
  long m = e % r;
  return static_cast<int>(m < 0 ? m + r : m);
}

std::optional<Witness> cycle_witness(const Arrangement& arr, const AffineMap& g) {
  const RingTag ring = arr.group().ring;
  const int r = ring.r();
  const auto& perm = g.lin.perm();
  const auto& exps = g.lin.exps();
  for (const auto& cyc : g.lin.cycles()) {
    if (cyc.size() < 2) continue;
    long s = 0;
    for (int a : cyc) s += exps[a];
    if (mod_r(s, r) != 0) continue;
    // Along an edge a -> b = perm[a] a fixed point satisfies u_b - w_a u_a = t_b.
    for (int a : cyc) {
      const int b = perm[a];
      const ParamScalar& tb = g.tran[b];
      std::optional<Witness> w;
      if (a < b) {
        const CycloScalar inv = root_of_unity(ring, -exps[a]);
        w = try_family(arr, LinearForm::difference(a, b, mod_r(-exps[a], r)), -(inv * tb));
      } else {
        w = try_family(arr, LinearForm::difference(b, a, exps[a]), tb);
      }
      if (w) return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> condition_witness(const Arrangement& arr, const AffineMap& g) {
  const GroupSpec& spec = arr.group();
  const RingTag ring = spec.ring;
  const int r = spec.r();
  const int p = spec.p();
  const std::size_t n = spec.n();
  const auto& perm = g.lin.perm();
  const auto& exps = g.lin.exps();
  const CycloScalar one = CycloScalar::one(ring);

  std::vector<int> idx;  // coordinates with a nontrivial diagonal entry
  for (std::size_t j = 0; j < n; ++j) {
    if (perm[j] == static_cast<int>(j) && exps[j] != 0) idx.push_back(static_cast<int>(j));
  }
  if (idx.empty()) return std::nullopt;

  if (r != p) {
    const AffineMap gp = power(g, p);
    if (!gp.is_identity()) {
      // (1): u_j = lambda_j^p u_j + beta with beta = x_j(Tran(g^p)).
      for (int j : idx) {
        const CycloScalar lp = root_of_unity(ring, static_cast<long>(exps[j]) * p);
        if (lp.is_one()) continue;
        const ParamScalar& beta = gp.tran[j];
        if (!spec.lattice.contains(beta * Vector::unit(ring, n, 0))) continue;
        if (auto w = try_coordinate(arr, j, lp, (one - lp).inverse() * beta)) return w;
      }
    } else {
      // (2): the coordinate value beta' = t_j / (1 - lambda_j) is itself admissible.
      const CycloScalar xp = root_of_unity(ring, p);
      for (int j : idx) {
        const ParamScalar bp = (one - root_of_unity(ring, exps[j])).inverse() * g.tran[j];
        if (!spec.lattice.contains(bp * Vector::unit(ring, n, 0))) continue;
        CRG_CHECK(spec.lattice.contains(((one - xp) * bp) * Vector::unit(ring, n, j)), Errc::Internal,
                  "(1 - xi^p) beta' e_j left the lattice");
        if (auto w = try_coordinate(arr, j, xp, bp)) return w;
      }
    }
  }

  // (3): two coordinate values in one orbit of G(r,1,1) x| Lambda'.
  if (idx.size() >= 2 && arr.fully_invariant() && !arr.difference_module().is_zero()) {
    std::vector<ParamScalar> vals;
    for (int j : idx) vals.push_back((one - root_of_unity(ring, exps[j])).inverse() * g.tran[j]);
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const auto m = orbit_equiv(r, arr.difference_module(), vals[a], vals[b]);
        if (!m) continue;
        const ParamScalar c = vals[a] - root_of_unity(ring, *m) * vals[b];
        if (auto w = try_family(arr, LinearForm::difference(idx[a], idx[b], *m), c)) return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> witness_from_cycle(const Arrangement& arr, const AffineMap& g) {
  if (!has_finite_order(g)) return std::nullopt;
  return cycle_witness(arr, g);
}

std::optional<Witness> witness_from_conditions(const Arrangement& arr, const AffineMap& g) {
  if (!has_finite_order(g)) return std::nullopt;
  return condition_witness(arr, g);
}

// ---------------------------------------------------------------- verdicts

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::NoFixedPoint: return "NoFixedPoint";
    case Outcome::IsReflectionPower: return "IsReflectionPower";
    case Outcome::OnHyperplane: return "OnHyperplane";
    case Outcome::Violation: return "VIOLATION";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

bool has_reflection_power(const MonomialMatrix& lin) {
  const long ord = lin.order();
  MonomialMatrix acc = lin;
  for (long j = 1; j < ord; ++j) {
    if (is_central_reflection(acc)) return true;
    acc = acc * lin;
  }
  return false;
}

// Everything about a linear part that does not depend on the translation.
struct LinearContext {
  MonomialMatrix lin;
  FixedPointSolver solver;
  bool reflection_power = false;
  std::vector<std::size_t> candidates;
  std::vector<std::vector<long long>> residual_rows;  // over lattice coordinates

  LinearContext(const Arrangement& arr, const MonomialMatrix& m, bool compile)
      : lin(m), solver(m), reflection_power(has_reflection_power(m)),
        candidates(arr.constant_families(solver.kernel())) {
    if (!compile) return;
    const auto& basis = arr.group().lattice.zbasis();
    const std::size_t rank = basis.size();
    QMatrix cols;
    for (const auto& z : basis) {
      QVector flat;
      for (const auto& s : solver.residual(z)) {
        const QVector f = flatten(s);
        flat.insert(flat.end(), f.begin(), f.end());
      }
      cols.push_back(std::move(flat));
    }
    if (cols.empty() || cols.front().empty()) return;
    const QMatrix rows = transpose(cols, cols.front().size());
    for (const auto& row : rows) {
      mpz_class den;
      const ZMatrix z = clear_denominators(QMatrix{row}, rank, den);
      std::vector<long long> ints;
      bool nonzero = false;
      for (const auto& v : z[0]) {
        CRG_CHECK(v.fits_slong_p(), Errc::TooLarge, "residual coefficient overflow");
        ints.push_back(v.get_si());
        nonzero = nonzero || v != 0;
      }
      if (nonzero) residual_rows.push_back(std::move(ints));
    }
  }
};

ElementVerdict classify(const Arrangement& arr, const LinearContext& ctx, const AffineMap& g) {
  ElementVerdict v;
  v.element = g;
  v.fixed = ctx.solver.solve(g.tran);
  if (v.fixed.empty) {
    v.outcome = Outcome::NoFixedPoint;
    return v;
  }
  v.witness = arr.subspace_on(v.fixed, ctx.candidates);
  if (!v.witness) {
    CRG_CHECK(!ctx.reflection_power, Errc::Internal,
              "a power of the element is a reflection but no hyperplane was found");
    v.outcome = Outcome::Violation;
  } else {
    v.outcome = ctx.reflection_power ? Outcome::IsReflectionPower : Outcome::OnHyperplane;
  }
  return v;
}

bool witness_agrees(const Arrangement& arr, const ElementVerdict& v, const Witness& w) {
  if (v.outcome != Outcome::OnHyperplane && v.outcome != Outcome::IsReflectionPower) return false;
  if (!is_reflection(w.reflection) || !is_member(arr.group(), w.reflection)) return false;
  return subspace_satisfies_form(v.fixed, w.form, w.constant);
}

}  // namespace

ElementVerdict verify_element(const Arrangement& arr, const AffineMap& g) {
  if (!is_member(arr.group(), g)) {
    throw Error(Errc::NotAMember, to_text(g) + " is not in " + arr.group().id.name());
  }
  CRG_CHECK(!g.is_identity(), Errc::InvalidParameters, "the identity has no verdict");
  const LinearContext ctx(arr, g.lin, false);
  return classify(arr, ctx, g);
}

ElementVerdict verify_element(const GroupSpec& w, const AffineMap& g) {
  return verify_element(Arrangement(w), g);
}

// ---------------------------------------------------------------- sweeps

namespace {

constexpr std::size_t kSampleChunks = 64;

void record(const Arrangement& arr, const LinearContext& ctx, const AffineMap& g, const SweepOptions& opts,
            SweepReport& rep) {
  ElementVerdict v = classify(arr, ctx, g);
  switch (v.outcome) {
    case Outcome::NoFixedPoint: ++rep.no_fixed_point; return;
    case Outcome::IsReflectionPower: ++rep.reflection_powers; break;
    case Outcome::OnHyperplane: ++rep.on_hyperplane; break;
    case Outcome::Violation:
      ++rep.violation_count;
      break;
  }
  if (opts.cross_check) {
    for (const auto& w : {cycle_witness(arr, g), condition_witness(arr, g)}) {
      if (!w) continue;
      ++rep.witness_fired;
      if (!witness_agrees(arr, v, *w)) ++rep.witness_disagreements;
    }
  }
  if (v.outcome == Outcome::Violation && rep.violations.size() < opts.max_recorded_violations) {
    rep.violations.push_back(std::move(v));
  }
}

Vector combine(const std::vector<Vector>& basis, const std::vector<int>& c, RingTag ring, std::size_t n) {
  Vector t(ring, n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] == 1) {
      t += basis[i];
    } else if (c[i] == -1) {
      t -= basis[i];
    } else {
      t += ParamScalar(CycloScalar(ring, Rational(c[i]))) * basis[i];
    }
  }
  return t;
}

bool all_zero(const std::vector<long long>& vals) {
  return std::all_of(vals.begin(), vals.end(), [](long long v) { return v == 0; });
}

void sweep_linear_part(const Arrangement& arr, const LinearContext& ctx, const SweepOptions& opts,
                       SweepReport& rep) {
  const auto& basis = arr.group().lattice.zbasis();
  const std::size_t m = basis.size();
  const int b = opts.bound;
  const RingTag ring = arr.group().ring;
  const std::size_t n = arr.group().n();
  const bool lin_identity = ctx.lin.is_identity();

  std::vector<int> c(m, -b);
  std::vector<long long> vals(ctx.residual_rows.size(), 0);
  for (std::size_t r = 0; r < vals.size(); ++r) {
    for (std::size_t i = 0; i < m; ++i) vals[r] += ctx.residual_rows[r][i] * c[i];
  }
  while (true) {
    const bool zero_t = std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
    if (lin_identity && zero_t) {
      ++rep.skipped_identity;
    } else {
      ++rep.examined;
      if (!all_zero(vals)) {
        ++rep.no_fixed_point;
      } else {
        record(arr, ctx, AffineMap{ctx.lin, combine(basis, c, ring, n)}, opts, rep);
      }
    }
    std::size_t i = 0;
    while (i < m && c[i] == b) {
      c[i] = -b;
      for (std::size_t r = 0; r < vals.size(); ++r) vals[r] -= 2LL * b * ctx.residual_rows[r][i];
      ++i;
    }
    if (i == m) break;
    ++c[i];
    for (std::size_t r = 0; r < vals.size(); ++r) vals[r] += ctx.residual_rows[r][i];
  }
}

void merge(SweepReport& into, SweepReport&& part, std::size_t cap) {
  into.examined += part.examined;
  into.skipped_identity += part.skipped_identity;
  into.no_fixed_point += part.no_fixed_point;
  into.reflection_powers += part.reflection_powers;
  into.on_hyperplane += part.on_hyperplane;
  into.violation_count += part.violation_count;
  into.witness_fired += part.witness_fired;
  into.witness_disagreements += part.witness_disagreements;
  for (auto& v : part.violations) {
    if (into.violations.size() >= cap) break;
    into.violations.push_back(std::move(v));
  }
}

template <class Fn>
void run_chunks(std::size_t chunks, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(chunks)));
  if (jobs == 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t c = next++; c < chunks; c = next++) fn(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

SweepReport sweep(const Arrangement& arr, const SweepOptions& opts) {
  CRG_CHECK(opts.bound >= 0, Errc::InvalidParameters, "bound must be non-negative");
  const auto start = std::chrono::steady_clock::now();
  const GroupSpec& spec = arr.group();
  const auto lins = enumerate_linear_group(spec.r(), spec.p(), static_cast<int>(spec.n()));
  const std::size_t m = spec.lattice.rank();

  SweepReport rep;
  rep.id = spec.id;
  rep.bound = opts.bound;
  rep.budget = opts.budget;
  rep.exhaustive = !opts.budget.has_value();
  rep.linear_parts = lins.size();
  rep.lattice_rank = m;
  rep.grid_size = static_cast<long double>(lins.size()) *
                  std::pow(static_cast<long double>(2 * opts.bound + 1), static_cast<long double>(m));

  if (rep.exhaustive) {
    std::vector<SweepReport> parts(lins.size());
    run_chunks(lins.size(), opts.jobs, [&](std::size_t k) {
      const LinearContext ctx(arr, lins[k], true);
      sweep_linear_part(arr, ctx, opts, parts[k]);
    });
    for (auto& p : parts) merge(rep, std::move(p), opts.max_recorded_violations);
  } else {
    // Contexts are built lazily per chunk; every chunk has its own seeded stream
    // so the result does not depend on the number of jobs.
    const std::uint64_t total = *opts.budget;
    std::vector<SweepReport> parts(kSampleChunks);
    run_chunks(kSampleChunks, opts.jobs, [&](std::size_t k) {
      const std::uint64_t share = total / kSampleChunks + (k < total % kSampleChunks ? 1 : 0);
      std::mt19937_64 rng(opts.seed + 0x9e3779b97f4a7c15ULL * (k + 1));
      std::uniform_int_distribution<std::size_t> pick_lin(0, lins.size() - 1);
      std::uniform_int_distribution<int> pick_c(-opts.bound, opts.bound);
      std::vector<std::optional<LinearContext>> cache(lins.size());
      SweepReport& rp = parts[k];
      std::vector<int> c(m);
      for (std::uint64_t s = 0; s < share; ++s) {
        const std::size_t li = pick_lin(rng);
        for (auto& x : c) x = pick_c(rng);
        if (!cache[li]) cache[li].emplace(arr, lins[li], false);
        const LinearContext& ctx = *cache[li];
        const bool zero_t = std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
        if (ctx.lin.is_identity() && zero_t) {
          ++rp.skipped_identity;
          continue;
        }
        ++rp.examined;
        record(arr, ctx, AffineMap{ctx.lin, combine(spec.lattice.zbasis(), c, spec.ring, spec.n())}, opts, rp);
      }
    });
    for (auto& p : parts) merge(rep, std::move(p), opts.max_recorded_violations);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// ---------------------------------------------------------------- certificates

CounterexampleReport check_counterexample(const GroupId& id) {
  const auto start = std::chrono::steady_clock::now();
  const GroupSpec spec = build_group(id);
  if (spec.expected_steinberg) {
    throw Error(Errc::ExpectedPositiveGroup, id.name() + " is expected to have the property");
  }
  CounterexampleReport rep;
  rep.id = id;
  rep.element = *spec.counterexample;
  const std::string who = id.name() + ": ";

  rep.member = is_member(spec, rep.element);
  if (!rep.member) throw Error(Errc::CounterexampleRejected, who + to_text(rep.element) + " is not a member");

  rep.fixed = fixed_space(rep.element);
  if (rep.fixed.empty) throw Error(Errc::CounterexampleRejected, who + "element has no fixed point");

  const Arrangement arr(spec);
  if (auto w = arr.subspace_on(rep.fixed)) {
    throw Error(Errc::CounterexampleRejected,
                who + "fixed space lies on " + to_text(w->form) + " = " + to_text(w->constant));
  }
  rep.off_arrangement = true;

  rep.orbit_check_applies = id.genuine && id.p == id.r && id.n == 3;
  if (rep.orbit_check_applies) {
    const RingTag ring = spec.ring;
    const ScalarModule zxi(ring, {ParamScalar::one(ring), ParamScalar(root_of_unity(ring, 1))});
    rep.orbit_inequivalent = rep.fixed.is_point();
    for (std::size_t a = 0; a < 3 && rep.orbit_inequivalent; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        if (orbit_equiv(id.r, zxi, rep.fixed.base[a], rep.fixed.base[b])) {
          rep.orbit_inequivalent = false;
          break;
        }
      }
    }
    if (!rep.orbit_inequivalent) {
      throw Error(Errc::CounterexampleRejected, who + "fixed-point coordinates share an orbit");
    }
  }
  rep.passed = true;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// ---------------------------------------------------------------- table

std::size_t TableReport::mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return r.mismatch(); }));
}

std::vector<std::pair<GroupId, bool>> table_rows(bool include_extensions) {
  std::vector<std::pair<GroupId, bool>> out;
  for (const auto& id : catalog_rows()) out.emplace_back(id, false);
  if (include_extensions) {
    for (int p : {1, 2, 3}) out.emplace_back(genuine_id(6, p, 3, 1), true);
  }
  return out;
}

TableRow evaluate_row(const GroupId& id, bool extension, const TableOptions& opts) {
  TableRow row;
  row.id = id;
  row.extension = extension;
  try {
    const GroupSpec spec = build_group(id);
    row.expected = spec.expected_steinberg ? Verdict::Holds : Verdict::Fails;
    if (!spec.expected_steinberg) {
      row.method = "certificate";
      row.certificate = check_counterexample(id);
      row.computed = Verdict::Fails;
      return row;
    }
    row.method = "sweep";
    const Arrangement arr(spec);
    const std::size_t m = spec.lattice.rank();
    const long double order = static_cast<long double>(
        enumerate_linear_group(spec.r(), spec.p(), static_cast<int>(spec.n())).size());
    auto grid = [&](int b) { return order * std::pow(static_cast<long double>(2 * b + 1), static_cast<long double>(m)); };

    SweepOptions so;
    so.bound = opts.bound;
    so.jobs = opts.jobs;
    so.seed = opts.seed;
    if (grid(opts.bound) > opts.exhaustive_cap) so.budget = opts.sample_budget;
    row.sweeps.push_back(sweep(arr, so));
    if (grid(opts.bound + 1) <= opts.extended_grid_cap) {
      SweepOptions wide = so;
      wide.bound = opts.bound + 1;
      wide.budget.reset();
      row.sweeps.push_back(sweep(arr, wide));
    }
    bool clean = true;
    for (const auto& s : row.sweeps) clean = clean && s.violation_count == 0;
    row.computed = clean ? Verdict::Holds : Verdict::Fails;
  } catch (const Error& e) {
    row.error = e.what();
    row.computed = Verdict::Undetermined;
  }
  return row;
}

TableReport full_table_report(const TableOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  TableReport rep;
  for (const auto& [id, ext] : table_rows(opts.include_extensions)) {
    rep.rows.push_back(evaluate_row(id, ext, opts));
    for (const auto& s : rep.rows.back().sweeps) {
      rep.witness_fired += s.witness_fired;
      rep.witness_disagreements += s.witness_disagreements;
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace crg
