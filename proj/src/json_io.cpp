#include "tmcat/json_io.hpp"

#include <fstream>
#include <utility>
#include <vector>

namespace tmcat {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object())
    throw JsonFormatError(std::string("expected an object with \"") + key +
                          "\", got " + j.dump());
  auto it = j.find(key);
  if (it == j.end())
    throw JsonFormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

// raw [key, value] pairs of a mapping, boundaries not yet imposed
std::vector<std::pair<Elem, Elem>> mapping_pairs(const json& j) {
  std::vector<std::pair<Elem, Elem>> out;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      out.push_back({Elem::atom(it.key()), elem_from_json(it.value())});
    return out;
  }
  if (j.is_array()) {
    for (const json& row : j) {
      if (!row.is_array() || row.size() != 2)
        throw JsonFormatError("mapping rows must be [key, value], got " +
                              row.dump());
      out.push_back({elem_from_json(row[0]), elem_from_json(row[1])});
    }
    return out;
  }
  throw JsonFormatError("a mapping must be an object or an array of rows");
}

}  // namespace

std::string json_kind(const json& j) {
  const json& k = field(j, "kind");
  if (!k.is_string()) throw JsonFormatError("\"kind\" must be a string");
  return k.get<std::string>();
}

json elem_to_json(const Elem& e) {
  switch (e.kind()) {
    case Elem::Kind::atom:
      return json(e.name());
    case Elem::Kind::pair:
      return json{{"pair", json::array({elem_to_json(e.first()),
                                        elem_to_json(e.second())})}};
    case Elem::Kind::list: {
      json items = json::array();
      for (const Elem& x : e.items()) items.push_back(elem_to_json(x));
      return json{{"list", std::move(items)}};
    }
  }
  throw JsonFormatError("unreachable token kind");
}

Elem elem_from_json(const json& j) {
  if (j.is_string()) return Elem::atom(j.get<std::string>());
  if (j.is_object()) {
    if (auto it = j.find("pair"); it != j.end()) {
      if (!it->is_array() || it->size() != 2)
        throw JsonFormatError("\"pair\" needs exactly two entries, got " +
                              j.dump());
      return Elem::pair(elem_from_json((*it)[0]), elem_from_json((*it)[1]));
    }
    if (auto it = j.find("list"); it != j.end()) {
      if (!it->is_array())
        throw JsonFormatError("\"list\" needs an array, got " + j.dump());
      std::vector<Elem> items;
      for (const json& x : *it) items.push_back(elem_from_json(x));
      return Elem::list(std::move(items));
    }
  }
  throw JsonFormatError("not a token: " + j.dump());
}

json set_to_json(const FinSetObj& x) {
  json out = json::array();
  for (const Elem& e : x.elements()) out.push_back(elem_to_json(e));
  return out;
}

FinSetObj set_from_json(const json& j) {
  if (!j.is_array())
    throw JsonFormatError("a set must be an array, got " + j.dump());
  std::vector<Elem> elems;
  for (const json& e : j) elems.push_back(elem_from_json(e));
  return FinSetObj(std::move(elems));
}

json mapping_to_json(const FinMap& u) {
  bool atoms_only = true;
  for (const Elem& e : u.dom().elements())
    if (!e.is_atom()) atoms_only = false;
  if (atoms_only) {
    json out = json::object();
    for (const Elem& e : u.dom().elements())
      out[e.name()] = elem_to_json(u(e));
    return out;
  }
  json out = json::array();
  for (const Elem& e : u.dom().elements())
    out.push_back(json::array({elem_to_json(e), elem_to_json(u(e))}));
  return out;
}

FinMap mapping_from_json(const json& j, const FinSetObj& dom,
                         const FinSetObj& cod) {
  return FinMap::from_pairs(dom, cod, mapping_pairs(j));
}

json map_to_json(const FinMap& u) {
  json graph = json::array();
  for (const Elem& e : u.dom().elements())
    graph.push_back(json::array({elem_to_json(e), elem_to_json(u(e))}));
  return json{{"kind", "map"},
              {"schemaVersion", kSchemaVersion},
              {"dom", set_to_json(u.dom())},
              {"cod", set_to_json(u.cod())},
              {"graph", std::move(graph)}};
}

FinMap map_from_json(const json& j) {
  FinSetObj dom = set_from_json(field(j, "dom"));
  FinSetObj cod = set_from_json(field(j, "cod"));
  return FinMap::from_pairs(dom, cod, mapping_pairs(field(j, "graph")));
}

json monoid_to_json(const MonoidTable& m) {
  json table = json::array();
  for (const Elem& a : m.elements().elements()) {
    json row = json::array();
    for (const Elem& b : m.elements().elements())
      row.push_back(elem_to_json(m.product(a, b)));
    table.push_back(std::move(row));
  }
  return json{{"kind", "monoid"},
              {"schemaVersion", kSchemaVersion},
              {"elements", set_to_json(m.elements())},
              {"unit", elem_to_json(m.unit())},
              {"table", std::move(table)}};
}

MonoidTable monoid_from_json(const json& j) {
  FinSetObj elems = set_from_json(field(j, "elements"));
  Elem unit = elem_from_json(field(j, "unit"));
  const json& rows = field(j, "table");
  if (!rows.is_array() || rows.size() != elems.size())
    throw JsonFormatError("monoid table needs one row per element");
  std::vector<std::vector<Elem>> table;
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != elems.size())
      throw JsonFormatError("monoid table rows must match the element count");
    std::vector<Elem> r;
    for (const json& v : row) r.push_back(elem_from_json(v));
    table.push_back(std::move(r));
  }
  return MonoidTable(elems.elements(), std::move(unit), std::move(table));
}

json monad_to_json(const MonadPtr& monad) {
  if (const MonoidTable* table = monad->monoid_table())
    return json{{"name", monad->name()}, {"monoid", monoid_to_json(*table)}};
  if (monad->name() == "identity" || monad->name() == "free-monoid")
    return json{{"name", monad->name()}};
  throw BoundaryError("no external form for monad " + monad->name());
}

MonadPtr monad_from_json(const json& j) {
  const json& n = field(j, "name");
  if (!n.is_string()) throw JsonFormatError("monad \"name\" must be a string");
  const std::string name = n.get<std::string>();
  if (name == "identity") return identity_monad();
  if (name == "free-monoid") return free_monoid_monad();
  if (name == "monoid-action")
    return monoid_action_monad(monoid_from_json(field(j, "monoid")));
  throw JsonFormatError("unknown monad \"" + name + "\"");
}

json multicat_to_json(const TMulticategory& m) {
  json comp = json::array();
  for (const Elem& t : m.x2().elements())
    comp.push_back(json::array({elem_to_json(t), elem_to_json(m.comp()(t))}));
  return json{{"kind", "multicat"},
              {"schemaVersion", kSchemaVersion},
              {"monad", monad_to_json(m.monad())},
              {"x0", set_to_json(m.x0())},
              {"x1", set_to_json(m.x1())},
              {"d0", mapping_to_json(m.d0())},
              {"d1", mapping_to_json(m.d1())},
              {"s0", mapping_to_json(m.s0())},
              {"comp", std::move(comp)}};
}

MulticatPtr multicat_from_json(const json& j) {
  MonadPtr monad = monad_from_json(field(j, "monad"));
  FinSetObj x0 = set_from_json(field(j, "x0"));
  FinSetObj x1 = set_from_json(field(j, "x1"));
  FinMap d0 = mapping_from_json(field(j, "d0"), x1, x0);
  FinMap s0 = mapping_from_json(field(j, "s0"), x0, x1);
  auto d1_pairs = mapping_pairs(field(j, "d1"));
  std::vector<Elem> d1_values;
  for (const auto& kv : d1_pairs) d1_values.push_back(kv.second);
  FinMap d1 = FinMap::from_pairs(x1, FinSetObj(std::move(d1_values)), d1_pairs);
  return make_multicat(std::move(monad), std::move(x0), std::move(x1),
                       std::move(d0), std::move(d1), std::move(s0),
                       mapping_pairs(field(j, "comp")));
}

json functor_to_json(const TFunctor& f) {
  return json{{"kind", "functor"},
              {"schemaVersion", kSchemaVersion},
              {"src", multicat_to_json(*f.src)},
              {"tgt", multicat_to_json(*f.tgt)},
              {"p0", mapping_to_json(f.p0)},
              {"p1", mapping_to_json(f.p1)}};
}

TFunctor functor_from_json(const json& j) {
  MulticatPtr src = multicat_from_json(field(j, "src"));
  MulticatPtr tgt = multicat_from_json(field(j, "tgt"));
  FinMap p0 = mapping_from_json(field(j, "p0"), src->x0(), tgt->x0());
  FinMap p1 = mapping_from_json(field(j, "p1"), src->x1(), tgt->x1());
  return {std::move(src), std::move(tgt), std::move(p0), std::move(p1)};
}

json model_to_json(const SketchModel& m) {
  json vertex = json::object();
  for (const auto& [name, x] : m.vertex) vertex[name] = set_to_json(x);
  json edge = json::object();
  for (const auto& [name, u] : m.edge) edge[name] = mapping_to_json(u);
  return json{{"kind", "model"},
              {"schemaVersion", kSchemaVersion},
              {"vertex", std::move(vertex)},
              {"edge", std::move(edge)}};
}

SketchModel model_from_json(const json& j) {
  const Sketch& s = multicat_sketch();
  const json& vertex = field(j, "vertex");
  const json& edge = field(j, "edge");
  SketchModel m;
  for (const std::string& v : s.vertices)
    m.vertex[v] = set_from_json(field(vertex, v.c_str()));
  for (const SketchEdge& e : s.edges)
    m.edge[e.id] = mapping_from_json(field(edge, e.id.c_str()),
                                     m.vertex.at(e.src), m.vertex.at(e.tgt));
  return m;
}

json pseudoeq_to_json(const PseudoEqObject& p) {
  json iota = json::object();
  for (const auto& [name, u] : p.iota) iota[name] = map_to_json(u);
  return json{{"kind", "pseudoeq-object"},
              {"schemaVersion", kSchemaVersion},
              {"monad", monad_to_json(p.monad)},
              {"model", model_to_json(p.model)},
              {"iota", std::move(iota)}};
}

PseudoEqObject pseudoeq_from_json(const json& j) {
  PseudoEqObject p;
  p.monad = monad_from_json(field(j, "monad"));
  p.model = model_from_json(field(j, "model"));
  const json& iota = field(j, "iota");
  for (const std::string& name : kIotaNames)
    p.iota[name] = map_from_json(field(iota, name.c_str()));
  return p;
}

json datum_to_json(const MultiDescentDatum& d) {
  return json{{"kind", "descent-datum"},
              {"schemaVersion", kSchemaVersion},
              {"v", multicat_to_json(*d.v)},
              {"a0", map_to_json(d.a.p0)},
              {"a1", map_to_json(d.a.p1)},
              {"gamma0", map_to_json(d.gamma0)},
              {"gamma1", map_to_json(d.gamma1)}};
}

MultiDescentDatum datum_from_json(const json& j, MulticatPtr anchor_target) {
  MulticatPtr v = multicat_from_json(field(j, "v"));
  FinMap a0 = map_from_json(field(j, "a0"));
  FinMap a1 = map_from_json(field(j, "a1"));
  TFunctor a{v, std::move(anchor_target), std::move(a0), std::move(a1)};
  return {std::move(v), std::move(a), map_from_json(field(j, "gamma0")),
          map_from_json(field(j, "gamma1"))};
}

json report_to_json(const Report& r) {
  json out = json::array();
  for (const ReportEntry& e : r.entries)
    out.push_back(json{{"check", e.check},
                       {"pass", e.pass},
                       {"witness", e.witness}});
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot read " + path);
  return json::parse(in);
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tmcat
