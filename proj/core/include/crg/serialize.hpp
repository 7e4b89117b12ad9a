#pragma once

// JSON views of groups, arrangements and reports. Scalars are written in
// their text form so every value stays exact.

#include <nlohmann/json.hpp>

#include "crg/steinberg.hpp"

namespace crg {

using json = nlohmann::json;

json to_json(const Vector& v);
json to_json(const MonomialMatrix& m);
json to_json(const AffineMap& g);
json to_json(const AffineSubspace& a);
json to_json(const ScalarModule& m);
json to_json(const Lattice& l);
json to_json(const GroupSpec& w);
json to_json(const Witness& w);
json to_json(const ElementVerdict& v);
json to_json(const Rank1Window& w);
json to_json(const SweepReport& s);
json to_json(const CounterexampleReport& c);
json to_json(const TableRow& row);
json to_json(const TableReport& t);

json families_json(const Arrangement& arr);
// Every catalog row with its lattice, generators, verdict and counterexample.
json catalog_json();

// Inverse of to_json(AffineMap); throws ParseError.
AffineMap affine_map_from_json(RingTag ring, const json& j);

}  // namespace crg
