#pragma once

// Steinberg checks: orbit calculus on C, structural witnesses, per-element
// verdicts, bounded sweeps, counterexample certificates and the verdict table.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crg/hyperplanes.hpp"

namespace crg {

// ---------------------------------------------------------------- orbits on C

struct OrbitQuery {
  int r = 1;
  ScalarModule module;
  ParamScalar z;
  ParamScalar w;
};

// Least m in [0, r) with z - xi^m w in the module.
std::optional<int> orbit_equiv(const OrbitQuery& q);
std::optional<int> orbit_equiv(int r, const ScalarModule& module, const ParamScalar& z,
                               const ParamScalar& w);
// Classes as sorted index lists, ordered by smallest member.
std::vector<std::vector<std::size_t>> orbit_classes(int r, const ScalarModule& module,
                                                    const std::vector<ParamScalar>& points);

// ---------------------------------------------------------------- witnesses

std::optional<Witness> witness_from_cycle(const Arrangement& arr, const AffineMap& g);
std::optional<Witness> witness_from_conditions(const Arrangement& arr, const AffineMap& g);

// ---------------------------------------------------------------- verdicts

enum class Outcome { NoFixedPoint, IsReflectionPower, OnHyperplane, Violation };
std::string to_string(Outcome o);

struct ElementVerdict {
  AffineMap element;
  Outcome outcome = Outcome::NoFixedPoint;
  AffineSubspace fixed;
  std::optional<Witness> witness;
};

// Throws NotAMember, InvalidParameters for the identity.
ElementVerdict verify_element(const Arrangement& arr, const AffineMap& g);
ElementVerdict verify_element(const GroupSpec& w, const AffineMap& g);

struct SweepOptions {
  int bound = 1;
  std::optional<std::uint64_t> budget;  // sample count; exhaustive when absent
  std::uint64_t seed = 20240611;
  unsigned jobs = 1;
  bool cross_check = true;
  std::size_t max_recorded_violations = 64;
};

struct SweepReport {
  GroupId id;
  int bound = 1;
  std::optional<std::uint64_t> budget;
  bool exhaustive = true;
  std::uint64_t linear_parts = 0;
  std::size_t lattice_rank = 0;
  long double grid_size = 0;  // |G| * (2B+1)^rank
  std::uint64_t examined = 0;
  std::uint64_t skipped_identity = 0;
  std::uint64_t no_fixed_point = 0;
  std::uint64_t reflection_powers = 0;
  std::uint64_t on_hyperplane = 0;
  std::uint64_t violation_count = 0;
  std::vector<ElementVerdict> violations;  // first max_recorded_violations, in sweep order
  std::uint64_t witness_fired = 0;
  std::uint64_t witness_disagreements = 0;
  double seconds = 0;
};

SweepReport sweep(const Arrangement& arr, const SweepOptions& opts);

struct CounterexampleReport {
  GroupId id;
  AffineMap element;
  bool member = false;
  AffineSubspace fixed;
  bool off_arrangement = false;
  bool orbit_check_applies = false;
  bool orbit_inequivalent = false;
  bool passed = false;
  double seconds = 0;
};

// Throws ExpectedPositiveGroup for rows that satisfy the property and
// CounterexampleRejected when any check fails.
CounterexampleReport check_counterexample(const GroupId& id);

enum class Verdict { Holds, Fails, Undetermined };
std::string to_string(Verdict v);

struct TableRow {
  GroupId id;
  bool extension = false;  // row added beyond the minimal dimension
  Verdict expected = Verdict::Holds;
  Verdict computed = Verdict::Undetermined;
  std::string method;
  std::vector<SweepReport> sweeps;
  std::optional<CounterexampleReport> certificate;
  std::string error;
  bool mismatch() const { return expected != computed; }
};

struct TableOptions {
  int bound = 1;
  // Extra sweep at bound + 1 when the grid has at most this many elements.
  long double extended_grid_cap = 2.0e6L;
  // Grids larger than this are sampled.
  long double exhaustive_cap = 2.0e7L;
  std::uint64_t sample_budget = 100000;
  bool include_extensions = true;
  unsigned jobs = 1;
  std::uint64_t seed = 20240611;
};

struct TableReport {
  std::vector<TableRow> rows;
  std::uint64_t witness_fired = 0;
  std::uint64_t witness_disagreements = 0;
  double seconds = 0;
  std::size_t mismatches() const;
};

// Rows at minimal dimension plus, when requested, the n = 3 extensions of
// the r = 6 rows that hold.
std::vector<std::pair<GroupId, bool>> table_rows(bool include_extensions);
TableRow evaluate_row(const GroupId& id, bool extension, const TableOptions& opts);
TableReport full_table_report(const TableOptions& opts = {});

}  // namespace crg
