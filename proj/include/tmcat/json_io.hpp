#pragma once

// External JSON formats, one reader and one writer per value shape.
//
// Tokens: atoms are plain strings, pairs are {"pair":[a,b]}, lists are
// {"list":[...]}.  Sets are arrays in canonical order.  A map embedded in a
// larger value whose domain and codomain are implied is a "mapping": a JSON
// object keyed by atom names when every domain element is an atom, otherwise
// an array of [key, value] token pairs.  A standalone map spells everything
// out as {"dom", "cod", "graph"}.
//
// Files carry a "kind" discriminator and "schemaVersion": 1 at top level.
// Writers emit canonical output: object keys sorted, arrays in carrier
// order, so identical values serialize to identical bytes.
//
// Shape problems (missing fields, bad token syntax, unknown kinds) throw
// JsonFormatError; values that parse but break typing throw the usual
// construction errors when the object is rebuilt.

#include <json.hpp>

#include <string>

#include "tmcat/descent.hpp"
#include "tmcat/finset.hpp"
#include "tmcat/monad.hpp"
#include "tmcat/multicat.hpp"
#include "tmcat/report.hpp"
#include "tmcat/sketch.hpp"

namespace tmcat {

inline constexpr int kSchemaVersion = 1;

struct JsonFormatError : Error {
  explicit JsonFormatError(const std::string& what) : Error(what) {}
};

// the "kind" field of a top-level value; throws JsonFormatError if absent
std::string json_kind(const nlohmann::json& j);

nlohmann::json elem_to_json(const Elem& e);
Elem elem_from_json(const nlohmann::json& j);

nlohmann::json set_to_json(const FinSetObj& x);
FinSetObj set_from_json(const nlohmann::json& j);

// mappings with implied boundaries
nlohmann::json mapping_to_json(const FinMap& u);
FinMap mapping_from_json(const nlohmann::json& j, const FinSetObj& dom,
                         const FinSetObj& cod);

// standalone maps with explicit boundaries
nlohmann::json map_to_json(const FinMap& u);
FinMap map_from_json(const nlohmann::json& j);

nlohmann::json monoid_to_json(const MonoidTable& m);
MonoidTable monoid_from_json(const nlohmann::json& j);

// monads are named; a monoid action monad embeds its table
nlohmann::json monad_to_json(const MonadPtr& monad);
MonadPtr monad_from_json(const nlohmann::json& j);

nlohmann::json multicat_to_json(const TMulticategory& m);
MulticatPtr multicat_from_json(const nlohmann::json& j);

nlohmann::json functor_to_json(const TFunctor& f);
TFunctor functor_from_json(const nlohmann::json& j);

// models and pseudo models over the fixed presentation
nlohmann::json model_to_json(const SketchModel& m);
SketchModel model_from_json(const nlohmann::json& j);

nlohmann::json pseudoeq_to_json(const PseudoEqObject& p);
PseudoEqObject pseudoeq_from_json(const nlohmann::json& j);

// a datum travels without its functor; the anchor target is supplied when
// reading
nlohmann::json datum_to_json(const MultiDescentDatum& d);
MultiDescentDatum datum_from_json(const nlohmann::json& j,
                                  MulticatPtr anchor_target);

nlohmann::json report_to_json(const Report& r);

// file plumbing: read throws JsonFormatError when the file cannot be
// opened and lets parse errors (with positions) propagate
nlohmann::json load_json_file(const std::string& path);
std::string pretty(const nlohmann::json& j);

}  // namespace tmcat
