#include "tmcat/sketch.hpp"

#include <algorithm>
#include <utility>

namespace tmcat {

namespace {

Sketch build_sketch() {
  Sketch s;
  s.vertices = {"x0", "x1", "x2", "x3", "xp0",
                "xp1", "xp2", "xpp0", "xpp1"};
  s.edges = {
      {"s0_x0", "x0", "x1"},    {"d0_x1", "x1", "x0"},
      {"d1_x1", "x1", "xp0"},   {"e0", "x0", "xp0"},
      {"s0_x1", "x1", "x2"},    {"s1_x1", "x1", "x2"},
      {"d0_x2", "x2", "x1"},    {"d1_x2", "x2", "x1"},
      {"d2_x2", "x2", "xp1"},   {"e1", "x1", "xp1"},
      {"d0_x3", "x3", "x2"},    {"d1_x3", "x3", "x2"},
      {"d2_x3", "x3", "x2"},    {"d3_x3", "x3", "xp2"},
      {"sp0", "xp0", "xp1"},    {"dp0_xp1", "xp1", "xp0"},
      {"dp1_xp1", "xp1", "xpp0"}, {"dp0_xp2", "xp2", "xp1"},
      {"dp1_xp2", "xp2", "xp1"},  {"dp2_xp2", "xp2", "xpp1"},
      {"m0", "xpp0", "xp0"},    {"m1", "xpp1", "xp1"},
      {"dpp0", "xpp1", "xpp0"},
  };
  s.relations = {
      {"degeneracy exchange on identities", "x0",
       {"s0_x0", "s1_x1"}, {"s0_x0", "s0_x1"}},
      {"identity source is the unit", "x0", {"s0_x0", "d1_x1"}, {"e0"}},
      {"degenerate pair tail is the unit", "x1", {"s1_x1", "d2_x2"}, {"e1"}},
      {"identity boundary retraction", "x0", {"s0_x0", "d0_x1"}, {}},
      {"degenerate pair outer retraction", "x1", {"s0_x1", "d0_x2"}, {}},
      {"right unit composition", "x1", {"s0_x1", "d1_x2"}, {}},
      {"left unit composition", "x1", {"s1_x1", "d1_x2"}, {}},
      {"degenerate tail is the lifted identity", "x1",
       {"s0_x1", "d2_x2"}, {"d1_x1", "sp0"}},
      {"outer of left degeneracy", "x1",
       {"s1_x1", "d0_x2"}, {"d0_x1", "s0_x0"}},
      {"lifted identity retraction", "xp0", {"sp0", "dp0_xp1"}, {}},
      {"pair source collapse", "x2",
       {"d1_x2", "d1_x1"}, {"d2_x2", "dp1_xp1", "m0"}},
      {"triple source collapse", "x3",
       {"d2_x3", "d2_x2"}, {"d3_x3", "dp2_xp2", "m1"}},
      {"pair membership square", "x2",
       {"d0_x2", "d1_x1"}, {"d2_x2", "dp0_xp1"}},
      {"triple membership square", "x3",
       {"d0_x3", "d2_x2"}, {"d3_x3", "dp0_xp2"}},
      {"inner composition is the lifted composition", "x3",
       {"d1_x3", "d2_x2"}, {"d3_x3", "dp1_xp2"}},
      {"composite target", "x2", {"d1_x2", "d0_x1"}, {"d0_x2", "d0_x1"}},
      {"triple outer targets", "x3",
       {"d1_x3", "d0_x2"}, {"d0_x3", "d0_x2"}},
      {"outer of outer composition", "x3",
       {"d2_x3", "d0_x2"}, {"d0_x3", "d1_x2"}},
      {"associativity", "x3", {"d2_x3", "d1_x2"}, {"d1_x3", "d1_x2"}},
      {"lifted membership square", "xp2",
       {"dp0_xp2", "dp1_xp1"}, {"dp2_xp2", "dpp0"}},
      {"lifted composite target", "xp2",
       {"dp1_xp2", "dp0_xp1"}, {"dp0_xp2", "dp0_xp1"}},
  };
  s.cones = {
      {"x2", "d0_x2", "d2_x2", "d1_x1", "dp0_xp1"},
      {"x3", "d0_x3", "d3_x3", "d2_x2", "dp0_xp2"},
      {"xp2", "dp0_xp2", "dp2_xp2", "dp1_xp1", "dpp0"},
  };
  return s;
}

FinMap unit_map(const Monad& T, const FinSetObj& from, const FinSetObj& to) {
  return FinMap::from_rule(from, to,
                           [&T](const Elem& x) { return T.unit(x); });
}

FinMap mult_map(const Monad& T, const FinSetObj& from, const FinSetObj& to) {
  return FinMap::from_rule(from, to,
                           [&T](const Elem& t) { return T.mult(t); });
}

// boundary table for the thirteen comparisons; lifts are materialized from
// the model's base vertices
struct IotaBoundary {
  std::string name, dom_vertex;
  FinSetObj cod;
};

std::vector<IotaBoundary> iota_boundaries(const Monad& T,
                                          const SketchModel& m) {
  FinSetObj tx0 = T.lift_set(m.at("x0"));
  FinSetObj tx1 = T.lift_set(m.at("x1"));
  FinSetObj tx2 = T.lift_set(m.at("x2"));
  FinSetObj txp0 = T.lift_set(m.at("xp0"));
  FinSetObj txp1 = T.lift_set(m.at("xp1"));
  FinSetObj ttx0 = T.lift_set(tx0);
  FinSetObj ttx1 = T.lift_set(tx1);
  return {
      {"iota_T_0", "xp0", tx0},   {"iota_T_1", "xp1", tx1},
      {"iota_T_2", "xp2", tx2},   {"iota_T_3", "xpp0", txp0},
      {"iota_T_4", "xpp1", txp1}, {"iota_m0_0", "xpp0", ttx0},
      {"iota_m0_1", "xp0", tx0},  {"iota_m1_0", "xpp1", ttx1},
      {"iota_m1_1", "xp1", tx1},  {"iota_e0_0", "x0", m.at("x0")},
      {"iota_e0_1", "xp0", tx0},  {"iota_e1_0", "x1", m.at("x1")},
      {"iota_e1_1", "xp1", tx1},
  };
}

const FinMap& iota_at(const PseudoEqObject& p, const std::string& name) {
  auto it = p.iota.find(name);
  if (it == p.iota.end())
    throw BoundaryError("missing comparison " + name);
  return it->second;
}

// check one square iota_after(edge(t)) == lifted(iota_before(t)) over the
// edge's source carrier
void check_square(Report& r, const std::string& label, const FinSetObj& over,
                  const FinMap& edge, const FinMap& iota_after,
                  const FinMap& lifted, const FinMap& iota_before) {
  for (const Elem& t : over) {
    if (!(iota_after.apply(edge.apply(t)) ==
          lifted.apply(iota_before.apply(t)))) {
      r.add(label, false, t.str());
      return;
    }
  }
  r.add(label, true);
}

}  // namespace

const SketchEdge& Sketch::edge(const std::string& id) const {
  for (const auto& e : edges)
    if (e.id == id) return e;
  throw Error("unknown edge " + id);
}

bool Sketch::has_vertex(const std::string& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

const Sketch& multicat_sketch() {
  static const Sketch s = build_sketch();
  return s;
}

const FinSetObj& SketchModel::at(const std::string& v) const {
  auto it = vertex.find(v);
  if (it == vertex.end()) throw BoundaryError("model misses vertex " + v);
  return it->second;
}

const FinMap& SketchModel::map_at(const std::string& e) const {
  auto it = edge.find(e);
  if (it == edge.end()) throw BoundaryError("model misses edge " + e);
  return it->second;
}

FinMap compose_path(const Sketch& s, const SketchModel& m,
                    const std::vector<std::string>& path,
                    const std::string& at) {
  FinMap acc = FinMap::identity(m.at(at));
  for (const auto& id : path) {
    (void)s.edge(id);
    acc = compose(m.map_at(id), acc);
  }
  return acc;
}

Report check_model(const Sketch& s, const SketchModel& m) {
  Report r;
  for (const auto& v : s.vertices)
    if (!m.vertex.count(v)) {
      r.add("all vertices present", false, v);
      return r;
    }
  r.add("all vertices present", true);
  for (const auto& e : s.edges) {
    if (!m.edge.count(e.id)) {
      r.add("all edges present with matching boundaries", false, e.id);
      return r;
    }
    const FinMap& f = m.map_at(e.id);
    if (!(f.dom() == m.at(e.src)) || !(f.cod() == m.at(e.tgt))) {
      r.add("all edges present with matching boundaries", false,
            e.id + " boundaries");
      return r;
    }
  }
  r.add("all edges present with matching boundaries", true);

  for (const auto& rel : s.relations) {
    FinMap lhs = compose_path(s, m, rel.lhs, rel.at);
    FinMap rhs = compose_path(s, m, rel.rhs, rel.at);
    bool pass = lhs.pointwise_equal(rhs);
    std::string witness;
    if (!pass)
      for (const Elem& u : m.at(rel.at))
        if (!(lhs.apply(u) == rhs.apply(u))) {
          witness = u.str();
          break;
        }
    r.add("relation: " + rel.name, pass, witness);
  }

  for (const auto& cone : s.cones) {
    const FinMap& pa = m.map_at(cone.proj_a);
    const FinMap& pb = m.map_at(cone.proj_b);
    const FinMap& sa = m.map_at(cone.side_a);
    const FinMap& sb = m.map_at(cone.side_b);
    std::string label = "cone at " + cone.apex;
    if (!compose(sa, pa).pointwise_equal(compose(sb, pb))) {
      r.add(label, false, "square does not commute");
      continue;
    }
    PullbackSquare chosen = chosen_pullback(sb, sa);
    try {
      FinMap cmp = FinMap::from_rule(
          m.at(cone.apex), chosen.apex, [&pa, &pb](const Elem& z) {
            return Elem::pair(pa.apply(z), pb.apply(z));
          });
      r.add(label, is_bijective(cmp),
            is_bijective(cmp) ? "" : "comparison is not a bijection");
    } catch (const Error& e) {
      r.add(label, false, e.what());
    }
  }
  return r;
}

SketchModel model_from_multicat(const TMulticategory& mc) {
  const Monad& T = *mc.monad();
  if (!T.finite_carriers())
    throw Error("cannot materialize lifted levels for " + T.name());
  SketchModel m;
  FinSetObj xp0 = T.lift_set(mc.x0());
  FinSetObj xp1 = T.lift_set(mc.x1());
  FinSetObj xp2 = T.lift_set(mc.x2());
  FinSetObj xpp0 = T.lift_set(xp0);
  FinSetObj xpp1 = T.lift_set(xp1);
  m.vertex = {{"x0", mc.x0()},   {"x1", mc.x1()}, {"x2", mc.x2()},
              {"x3", mc.x3()},   {"xp0", xp0},    {"xp1", xp1},
              {"xp2", xp2},      {"xpp0", xpp0},  {"xpp1", xpp1}};
  FinMap d1_full = mc.d1().retarget(xp0);
  FinMap d2_full = mc.x2_d2().retarget(xp1);
  m.edge["s0_x0"] = mc.s0();
  m.edge["d0_x1"] = mc.d0();
  m.edge["d1_x1"] = d1_full;
  m.edge["e0"] = unit_map(T, mc.x0(), xp0);
  m.edge["s0_x1"] = mc.x2_s0();
  m.edge["s1_x1"] = mc.x2_s1();
  m.edge["d0_x2"] = mc.x2_d0();
  m.edge["d1_x2"] = mc.comp();
  m.edge["d2_x2"] = d2_full;
  m.edge["e1"] = unit_map(T, mc.x1(), xp1);
  m.edge["d0_x3"] = mc.x3_d0();
  m.edge["d1_x3"] = mc.x3_d1();
  m.edge["d2_x3"] = mc.x3_d2();
  m.edge["d3_x3"] = mc.x3_d3().retarget(xp2);
  m.edge["sp0"] = T.lift_map(mc.s0());
  m.edge["dp0_xp1"] = T.lift_map(mc.d0());
  m.edge["dp1_xp1"] = T.lift_map(d1_full);
  m.edge["dp0_xp2"] = T.lift_map(mc.x2_d0());
  m.edge["dp1_xp2"] = T.lift_map(mc.comp());
  m.edge["dp2_xp2"] = T.lift_map(d2_full);
  m.edge["m0"] = mult_map(T, xpp0, xp0);
  m.edge["m1"] = mult_map(T, xpp1, xp1);
  m.edge["dpp0"] = T.lift_map(T.lift_map(mc.d0()));
  return m;
}

Report check_model_morphism(const Sketch& s, const SketchModel& src,
                            const SketchModel& tgt, const ModelMorphism& f) {
  Report r;
  for (const auto& v : s.vertices) {
    auto it = f.find(v);
    if (it == f.end()) {
      r.add("components present with matching boundaries", false, v);
      return r;
    }
    if (!(it->second.dom() == src.at(v)) || !(it->second.cod() == tgt.at(v))) {
      r.add("components present with matching boundaries", false,
            v + " boundaries");
      return r;
    }
  }
  r.add("components present with matching boundaries", true);
  for (const auto& e : s.edges) {
    const FinMap& upstairs = src.map_at(e.id);
    const FinMap& downstairs = tgt.map_at(e.id);
    const FinMap& at_src = f.at(e.src);
    const FinMap& at_tgt = f.at(e.tgt);
    for (const Elem& u : src.at(e.src)) {
      if (!(downstairs.apply(at_src.apply(u)) ==
            at_tgt.apply(upstairs.apply(u)))) {
        r.add("edge squares commute", false, e.id + " at " + u.str());
        return r;
      }
    }
  }
  r.add("edge squares commute", true);
  return r;
}

const std::vector<std::string> kIotaNames = {
    "iota_T_0",  "iota_T_1",  "iota_T_2",  "iota_T_3",  "iota_T_4",
    "iota_m0_0", "iota_m0_1", "iota_m1_0", "iota_m1_1", "iota_e0_0",
    "iota_e0_1", "iota_e1_0", "iota_e1_1"};

Report check_pseudoeq_object(const PseudoEqObject& p) {
  Report r;
  const Sketch& s = multicat_sketch();
  r.merge(check_model(s, p.model), "model: ");
  if (!r.ok()) return r;

  const Monad& T = *p.monad;
  for (const auto& b : iota_boundaries(T, p.model)) {
    auto it = p.iota.find(b.name);
    if (it == p.iota.end()) {
      r.add("comparison " + b.name, false, "missing");
      continue;
    }
    const FinMap& i = it->second;
    if (!(i.dom() == p.model.at(b.dom_vertex)) || !(i.cod() == b.cod)) {
      r.add("comparison " + b.name, false, "boundaries");
      continue;
    }
    r.add("comparison " + b.name, is_bijective(i),
          is_bijective(i) ? "" : "not a bijection");
  }
  if (!r.ok()) return r;

  const SketchModel& m = p.model;
  check_square(r, "lifted identities square", m.at("xp0"), m.map_at("sp0"),
               iota_at(p, "iota_T_1"), T.lift_map(m.map_at("s0_x0")),
               iota_at(p, "iota_T_0"));
  check_square(r, "lifted targets square", m.at("xp1"), m.map_at("dp0_xp1"),
               iota_at(p, "iota_T_0"), T.lift_map(m.map_at("d0_x1")),
               iota_at(p, "iota_T_1"));
  check_square(r, "lifted sources square", m.at("xp1"), m.map_at("dp1_xp1"),
               iota_at(p, "iota_T_3"), T.lift_map(m.map_at("d1_x1")),
               iota_at(p, "iota_T_1"));
  check_square(r, "lifted pair outer square", m.at("xp2"),
               m.map_at("dp0_xp2"), iota_at(p, "iota_T_1"),
               T.lift_map(m.map_at("d0_x2")), iota_at(p, "iota_T_2"));
  check_square(r, "lifted composition square", m.at("xp2"),
               m.map_at("dp1_xp2"), iota_at(p, "iota_T_1"),
               T.lift_map(m.map_at("d1_x2")), iota_at(p, "iota_T_2"));
  check_square(r, "lifted pair tail square", m.at("xp2"),
               m.map_at("dp2_xp2"), iota_at(p, "iota_T_4"),
               T.lift_map(m.map_at("d2_x2")), iota_at(p, "iota_T_2"));
  check_square(r, "doubly lifted targets square", m.at("xpp1"),
               m.map_at("dpp0"), iota_at(p, "iota_T_3"),
               T.lift_map(m.map_at("dp0_xp1")), iota_at(p, "iota_T_4"));

  FinSetObj tx0 = T.lift_set(m.at("x0"));
  FinSetObj tx1 = T.lift_set(m.at("x1"));
  check_square(r, "collapse square at level 0", m.at("xpp0"), m.map_at("m0"),
               iota_at(p, "iota_m0_1"),
               mult_map(T, T.lift_set(tx0), tx0), iota_at(p, "iota_m0_0"));
  check_square(r, "collapse square at level 1", m.at("xpp1"), m.map_at("m1"),
               iota_at(p, "iota_m1_1"),
               mult_map(T, T.lift_set(tx1), tx1), iota_at(p, "iota_m1_0"));
  check_square(r, "unit square at level 0", m.at("x0"), m.map_at("e0"),
               iota_at(p, "iota_e0_1"), unit_map(T, m.at("x0"), tx0),
               iota_at(p, "iota_e0_0"));
  check_square(r, "unit square at level 1", m.at("x1"), m.map_at("e1"),
               iota_at(p, "iota_e1_1"), unit_map(T, m.at("x1"), tx1),
               iota_at(p, "iota_e1_0"));
  return r;
}

Report check_coherence(const PseudoEqObject& p) {
  Report r;
  const Monad& T = *p.monad;
  r.add("collapse tail comparison agrees at level 0",
        iota_at(p, "iota_m0_1").pointwise_equal(iota_at(p, "iota_T_0")));
  r.add("collapse tail comparison agrees at level 1",
        iota_at(p, "iota_m1_1").pointwise_equal(iota_at(p, "iota_T_1")));
  r.add("unit tail comparison agrees at level 0",
        iota_at(p, "iota_e0_1").pointwise_equal(iota_at(p, "iota_T_0")));
  r.add("unit tail comparison agrees at level 1",
        iota_at(p, "iota_e1_1").pointwise_equal(iota_at(p, "iota_T_1")));

  bool lvl0 = true;
  for (const Elem& v : p.model.at("xpp0"))
    if (!(T.map_elem(iota_at(p, "iota_T_0"),
                     iota_at(p, "iota_T_3").apply(v)) ==
          iota_at(p, "iota_m0_0").apply(v))) {
      r.add("double comparison factors at level 0", false, v.str());
      lvl0 = false;
      break;
    }
  if (lvl0) r.add("double comparison factors at level 0", true);

  bool lvl1 = true;
  for (const Elem& v : p.model.at("xpp1"))
    if (!(T.map_elem(iota_at(p, "iota_T_1"),
                     iota_at(p, "iota_T_4").apply(v)) ==
          iota_at(p, "iota_m1_0").apply(v))) {
      r.add("double comparison factors at level 1", false, v.str());
      lvl1 = false;
      break;
    }
  if (lvl1) r.add("double comparison factors at level 1", true);

  r.add("object comparison is the identity at level 0",
        iota_at(p, "iota_e0_0")
            .pointwise_equal(FinMap::identity(p.model.at("x0"))));
  r.add("object comparison is the identity at level 1",
        iota_at(p, "iota_e1_0")
            .pointwise_equal(FinMap::identity(p.model.at("x1"))));
  return r;
}

PseudoEqObject strict_object(const TMulticategory& mc) {
  PseudoEqObject p;
  p.monad = mc.monad();
  p.model = model_from_multicat(mc);
  auto id_on = [&p](const std::string& v) {
    return FinMap::identity(p.model.at(v));
  };
  p.iota["iota_T_0"] = id_on("xp0");
  p.iota["iota_T_1"] = id_on("xp1");
  p.iota["iota_T_2"] = id_on("xp2");
  p.iota["iota_T_3"] = id_on("xpp0");
  p.iota["iota_T_4"] = id_on("xpp1");
  p.iota["iota_m0_0"] = id_on("xpp0");
  p.iota["iota_m0_1"] = id_on("xp0");
  p.iota["iota_m1_0"] = id_on("xpp1");
  p.iota["iota_m1_1"] = id_on("xp1");
  p.iota["iota_e0_0"] = id_on("x0");
  p.iota["iota_e0_1"] = id_on("xp0");
  p.iota["iota_e1_0"] = id_on("x1");
  p.iota["iota_e1_1"] = id_on("xp1");
  return p;
}

Report check_p_morphism(const PseudoEqObject& strict_src,
                        const PseudoEqObject& tgt, const ModelMorphism& f) {
  Report r;
  const Sketch& s = multicat_sketch();
  bool strict = true;
  for (const auto& name : kIotaNames) {
    const FinMap& i = iota_at(strict_src, name);
    if (!i.pointwise_equal(FinMap::identity(i.dom()))) {
      strict = false;
      break;
    }
  }
  r.add("source is strict", strict);
  r.merge(check_model_morphism(s, strict_src.model, tgt.model, f),
          "components: ");
  if (!r.ok()) return r;

  const Monad& T = *tgt.monad;
  auto lifted_slot = [&](const std::string& label, const std::string& over,
                         const FinMap& lower, const FinMap& lifted_comp,
                         const std::string& iota_name) {
    const FinMap& i = iota_at(tgt, iota_name);
    for (const Elem& u : strict_src.model.at(over)) {
      if (!(T.map_elem(lower, u) == i.apply(lifted_comp.apply(u)))) {
        r.add(label, false, u.str());
        return;
      }
    }
    r.add(label, true);
  };

  bool e0fix = true;
  for (const Elem& x : strict_src.model.at("x0"))
    if (!(f.at("x0").apply(x) ==
          iota_at(tgt, "iota_e0_0").apply(f.at("x0").apply(x)))) {
      r.add("object slot at level 0", false, x.str());
      e0fix = false;
      break;
    }
  if (e0fix) r.add("object slot at level 0", true);
  bool e1fix = true;
  for (const Elem& x : strict_src.model.at("x1"))
    if (!(f.at("x1").apply(x) ==
          iota_at(tgt, "iota_e1_0").apply(f.at("x1").apply(x)))) {
      r.add("object slot at level 1", false, x.str());
      e1fix = false;
      break;
    }
  if (e1fix) r.add("object slot at level 1", true);

  lifted_slot("lift slot on xp0", "xp0", f.at("x0"), f.at("xp0"), "iota_T_0");
  lifted_slot("collapse tail slot on xp0", "xp0", f.at("x0"), f.at("xp0"),
              "iota_m0_1");
  lifted_slot("unit tail slot on xp0", "xp0", f.at("x0"), f.at("xp0"),
              "iota_e0_1");
  lifted_slot("lift slot on xp1", "xp1", f.at("x1"), f.at("xp1"), "iota_T_1");
  lifted_slot("collapse tail slot on xp1", "xp1", f.at("x1"), f.at("xp1"),
              "iota_m1_1");
  lifted_slot("unit tail slot on xp1", "xp1", f.at("x1"), f.at("xp1"),
              "iota_e1_1");
  lifted_slot("lift slot on xp2", "xp2", f.at("x2"), f.at("xp2"), "iota_T_2");
  lifted_slot("lift slot on xpp0", "xpp0", f.at("xp0"), f.at("xpp0"),
              "iota_T_3");
  lifted_slot("lift slot on xpp1", "xpp1", f.at("xp1"), f.at("xpp1"),
              "iota_T_4");
  lifted_slot("double lift slot on xpp0", "xpp0", T.lift_map(f.at("x0")),
              f.at("xpp0"), "iota_m0_0");
  lifted_slot("double lift slot on xpp1", "xpp1", T.lift_map(f.at("x1")),
              f.at("xpp1"), "iota_m1_0");
  return r;
}

HatResult hat_construction(const PseudoEqObject& p) {
  const Monad& T = *p.monad;
  const SketchModel& m = p.model;
  const FinMap& it0 = iota_at(p, "iota_T_0");
  const FinMap& it1 = iota_at(p, "iota_T_1");
  const FinMap& it2 = iota_at(p, "iota_T_2");

  FinMap hat_d1_raw = compose(it0, m.map_at("d1_x1"));
  std::vector<Elem> d1_values;
  for (const Elem& g : m.at("x1")) d1_values.push_back(hat_d1_raw.apply(g));
  FinMap hat_d1(m.at("x1"), FinSetObj(d1_values), d1_values);

  PullbackSquare pair_level = t_pullback(T, hat_d1, m.map_at("d0_x1"));
  FinMap beta = FinMap::from_rule(
      m.at("x2"), pair_level.apex, [&](const Elem& z) {
        return Elem::pair(m.map_at("d0_x2").apply(z),
                          it1.apply(m.map_at("d2_x2").apply(z)));
      });
  if (!is_bijective(beta))
    throw CommutationError("pair comparison is not a bijection");
  FinMap beta_inv = inverse(beta);

  const FinMap& comp_edge = m.map_at("d1_x2");
  MulticatPtr object = make_multicat(
      p.monad, m.at("x0"), m.at("x1"), m.map_at("d0_x1"), hat_d1,
      m.map_at("s0_x0"), [&](const Elem& xi) {
        return comp_edge.apply(beta_inv.apply(xi));
      });

  SketchModel sm = model_from_multicat(*object);
  FinMap beta3 = FinMap::from_rule(
      m.at("x3"), sm.at("x3"), [&](const Elem& z) {
        return Elem::pair(
            beta.apply(m.map_at("d0_x3").apply(z)),
            T.map_elem(beta, it2.apply(m.map_at("d3_x3").apply(z))));
      });
  if (!is_bijective(beta3))
    throw CommutationError("triple comparison is not a bijection");

  ModelMorphism iso;
  iso["x0"] = FinMap::identity(m.at("x0"));
  iso["x1"] = FinMap::identity(m.at("x1"));
  iso["x2"] = inverse(beta);
  iso["x3"] = inverse(beta3);
  iso["xp0"] = inverse(it0).retarget(m.at("xp0"));
  iso["xp1"] = inverse(it1).retarget(m.at("xp1"));
  FinMap tbeta_inv = T.lift_map(beta_inv);
  FinMap it2_inv = inverse(it2);
  iso["xp2"] = FinMap::from_rule(sm.at("xp2"), m.at("xp2"),
                                 [&](const Elem& u) {
                                   return it2_inv.apply(tbeta_inv.apply(u));
                                 });
  iso["xpp0"] = inverse(iota_at(p, "iota_m0_0")).retarget(m.at("xpp0"));
  iso["xpp1"] = inverse(iota_at(p, "iota_m1_0")).retarget(m.at("xpp1"));

  HatResult out{std::move(object), std::move(beta), std::move(iso)};
  return out;
}

PseudoEqObject coherent_relabel(const TMulticategory& mc) {
  const Monad& T = *mc.monad();
  PseudoEqObject p = strict_object(mc);
  SketchModel& m = p.model;

  auto fresh = [](const FinSetObj& from, const std::string& prefix) {
    FinSetObj names = canonical_atoms(prefix, from.size());
    return FinMap(from, names, names.elements());
  };
  FinMap rho_p0 = fresh(m.at("xp0"), "c0_");
  FinMap rho_p1 = fresh(m.at("xp1"), "c1_");
  FinMap rho_p2 = fresh(m.at("xp2"), "c2_");
  FinMap rho_pp0 = fresh(m.at("xpp0"), "w0_");
  FinMap rho_pp1 = fresh(m.at("xpp1"), "w1_");

  std::map<std::string, FinMap> rho;
  for (const auto& v : {"x0", "x1", "x2", "x3"})
    rho.emplace(v, FinMap::identity(m.at(v)));
  rho.emplace("xp0", rho_p0);
  rho.emplace("xp1", rho_p1);
  rho.emplace("xp2", rho_p2);
  rho.emplace("xpp0", rho_pp0);
  rho.emplace("xpp1", rho_pp1);

  const Sketch& s = multicat_sketch();
  SketchModel relabeled;
  for (const auto& v : s.vertices) relabeled.vertex[v] = rho.at(v).cod();
  for (const auto& e : s.edges)
    relabeled.edge[e.id] =
        compose(rho.at(e.tgt), compose(m.map_at(e.id), inverse(rho.at(e.src))));

  PseudoEqObject out;
  out.monad = p.monad;
  out.model = std::move(relabeled);
  FinMap it0 = inverse(rho_p0);
  FinMap it1 = inverse(rho_p1);
  out.iota["iota_T_0"] = it0;
  out.iota["iota_T_1"] = it1;
  out.iota["iota_T_2"] = inverse(rho_p2);
  out.iota["iota_T_3"] = compose(T.lift_map(rho_p0), inverse(rho_pp0));
  out.iota["iota_T_4"] = compose(T.lift_map(rho_p1), inverse(rho_pp1));
  out.iota["iota_m0_0"] = inverse(rho_pp0);
  out.iota["iota_m0_1"] = it0;
  out.iota["iota_m1_0"] = inverse(rho_pp1);
  out.iota["iota_m1_1"] = it1;
  out.iota["iota_e0_0"] = FinMap::identity(mc.x0());
  out.iota["iota_e0_1"] = it0;
  out.iota["iota_e1_0"] = FinMap::identity(mc.x1());
  out.iota["iota_e1_1"] = it1;
  return out;
}

PseudoEqObject incoherent_mutation(const PseudoEqObject& p) {
  const FinSetObj& x0 = p.model.at("x0");
  if (x0.size() < 2)
    throw Error("mutation needs at least two objects");
  const Monad& T = *p.monad;

  std::vector<Elem> swapped(x0.elements());
  std::swap(swapped[0], swapped[1]);
  FinMap tau(x0, x0, swapped);

  const FinMap& e0 = p.model.map_at("e0");
  const FinMap& old = iota_at(p, "iota_e0_1");
  std::vector<std::pair<Elem, Elem>> forced;
  for (const Elem& x : x0)
    forced.push_back({e0.apply(x), T.unit(tau.apply(x))});
  FinMap adjusted = FinMap::from_rule(
      old.dom(), old.cod(), [&](const Elem& v) {
        for (const auto& [key, value] : forced)
          if (key == v) return value;
        return old.apply(v);
      });

  PseudoEqObject out = p;
  out.iota["iota_e0_0"] = std::move(tau);
  out.iota["iota_e0_1"] = std::move(adjusted);
  return out;
}

std::vector<SurjectiveImage> surjective_images(const TMulticategory& mc) {
  const Monad& T = *mc.monad();
  PseudoEqObject strict = strict_object(mc);
  const SketchModel& m = strict.model;
  const Sketch& s = multicat_sketch();
  std::vector<SurjectiveImage> out;

  // quotient of `over` whose classes are the joint fibers of the given maps
  auto joint_quotient = [](const FinSetObj& over,
                           const std::vector<FinMap>& maps) {
    std::vector<Elem> keys;
    keys.reserve(over.size());
    for (const Elem& u : over) {
      std::vector<Elem> parts;
      for (const FinMap& f : maps) parts.push_back(f.apply(u));
      keys.push_back(Elem::list(std::move(parts)));
    }
    FinMap key_map(over, FinSetObj(keys), keys);
    return coequalizer_of_kernel_pair(key_map).proj;
  };
  auto kernel_of_lift = [&T](const FinMap& q, const FinSetObj& over) {
    FinMap lifted =
        FinMap::from_rule(over, T.lift_set(q.cod()),
                          [&](const Elem& u) { return T.map_elem(q, u); });
    return coequalizer_of_kernel_pair(lifted).proj;
  };

  for (const FinMap& q0 : all_quotient_maps(m.at("x0"))) {
    for (const FinMap& q1 : all_quotient_maps(m.at("x1"))) {
      ModelMorphism f;
      f["x0"] = q0;
      f["x1"] = q1;
      // lifted-level quotients are forced: the comparisons must be
      // bijections, so each lifted kernel is the kernel of the lifted map
      f["xp0"] = kernel_of_lift(q0, m.at("xp0"));
      f["xp1"] = kernel_of_lift(q1, m.at("xp1"));
      // the pair level is forced by its cone: classes are joint fibers of
      // the factored outer and tail maps
      f["x2"] = joint_quotient(
          m.at("x2"), {compose(q1, m.map_at("d0_x2")),
                       compose(f.at("xp1"), m.map_at("d2_x2"))});
      f["xp2"] = kernel_of_lift(f.at("x2"), m.at("xp2"));
      f["x3"] = joint_quotient(
          m.at("x3"), {compose(f.at("x2"), m.map_at("d0_x3")),
                       compose(f.at("xp2"), m.map_at("d3_x3"))});
      f["xpp0"] = kernel_of_lift(f.at("xp0"), m.at("xpp0"));
      f["xpp1"] = kernel_of_lift(f.at("xp1"), m.at("xpp1"));

      SketchModel y;
      bool good = true;
      for (const auto& v : s.vertices) y.vertex[v] = f.at(v).cod();
      for (const auto& e : s.edges) {
        auto factored =
            factor_map(m.map_at(e.id), f.at(e.src), f.at(e.tgt));
        if (!factored) {
          good = false;
          break;
        }
        y.edge[e.id] = std::move(*factored);
      }
      if (!good) continue;

      IotaFamily iota;
      auto lifted_comparison = [&](const FinMap& q_low, const FinMap& q_high,
                                   const FinSetObj& over) {
        FinMap lifted = FinMap::from_rule(
            over, T.lift_set(q_low.cod()),
            [&](const Elem& u) { return T.map_elem(q_low, u); });
        return factor_map(lifted, q_high, FinMap::identity(lifted.cod()));
      };
      auto double_comparison = [&](const FinMap& q_low, const FinMap& q_high,
                                   const FinSetObj& over) {
        FinMap low_lift = T.lift_map(q_low);
        FinMap lifted = FinMap::from_rule(
            over, T.lift_set(low_lift.cod()),
            [&](const Elem& u) { return T.map_elem(low_lift, u); });
        return factor_map(lifted, q_high, FinMap::identity(lifted.cod()));
      };
      struct Derived {
        const char* name;
        std::optional<FinMap> value;
      };
      std::vector<Derived> derived;
      derived.push_back(
          {"iota_T_0", lifted_comparison(q0, f.at("xp0"), m.at("xp0"))});
      derived.push_back(
          {"iota_T_1", lifted_comparison(q1, f.at("xp1"), m.at("xp1"))});
      derived.push_back({"iota_T_2", lifted_comparison(f.at("x2"),
                                                       f.at("xp2"),
                                                       m.at("xp2"))});
      derived.push_back({"iota_T_3", lifted_comparison(f.at("xp0"),
                                                       f.at("xpp0"),
                                                       m.at("xpp0"))});
      derived.push_back({"iota_T_4", lifted_comparison(f.at("xp1"),
                                                       f.at("xpp1"),
                                                       m.at("xpp1"))});
      derived.push_back(
          {"iota_m0_0", double_comparison(q0, f.at("xpp0"), m.at("xpp0"))});
      derived.push_back(
          {"iota_m1_0", double_comparison(q1, f.at("xpp1"), m.at("xpp1"))});
      for (auto& d : derived) {
        if (!d.value) {
          good = false;
          break;
        }
        iota[d.name] = std::move(*d.value);
      }
      if (!good) continue;
      iota["iota_m0_1"] = iota.at("iota_T_0");
      iota["iota_m1_1"] = iota.at("iota_T_1");
      iota["iota_e0_0"] = FinMap::identity(y.at("x0"));
      iota["iota_e0_1"] = iota.at("iota_T_0");
      iota["iota_e1_0"] = FinMap::identity(y.at("x1"));
      iota["iota_e1_1"] = iota.at("iota_T_1");

      PseudoEqObject candidate{mc.monad(), std::move(y), std::move(iota)};
      if (!check_pseudoeq_object(candidate).ok()) continue;
      out.push_back({std::move(candidate), std::move(f)});
    }
  }
  return out;
}

Report epi_forces_coherence(const PseudoEqObject& strict_src,
                            const PseudoEqObject& tgt,
                            const ModelMorphism& f) {
  Report r;
  r.merge(check_pseudoeq_object(tgt), "target: ");
  bool surj = true;
  std::string bad;
  for (const auto& [v, comp] : f)
    if (!is_surjective(comp)) {
      surj = false;
      bad = v;
      break;
    }
  r.add("all components surjective", surj, bad);
  r.merge(check_p_morphism(strict_src, tgt, f), "morphism: ");
  if (!r.ok()) return r;
  r.merge(check_coherence(tgt), "conclusion: ");
  return r;
}

}  // namespace tmcat
