#include "tmcat/descent.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace tmcat {

namespace {

std::string first_failure(const Report& r) {
  for (const auto& e : r.entries)
    if (!e.pass)
      return e.check + (e.witness.empty() ? "" : " (" + e.witness + ")");
  return "";
}

std::string surj_witness(const FinMap& f) {
  FinSetObj im = image(f);
  for (const Elem& c : f.cod())
    if (!im.contains(c)) return "no preimage of " + c.str();
  return "";
}

bool same_structure(const MulticatPtr& a, const MulticatPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return a->monad()->signature() == b->monad()->signature() &&
         a->x0() == b->x0() && a->x1() == b->x1() && a->d0() == b->d0() &&
         a->d1() == b->d1() && a->s0() == b->s0() && a->comp() == b->comp();
}

// union-find over indices; uniting toward the smaller index keeps the least
// element of each class as its root
struct Dsu {
  std::vector<std::size_t> parent;

  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::size_t find(std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent[b] = a;
    else
      parent[a] = b;
  }
};

// odometer over one pick from each slot; a single empty tuple when there are
// no slots, nothing when some slot is empty
void for_each_choice(const std::vector<std::vector<Elem>>& choices,
                     const std::function<void(const std::vector<Elem>&)>& fn) {
  for (const auto& slot : choices)
    if (slot.empty()) return;
  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<Elem> current(choices.size());
  for (;;) {
    for (std::size_t i = 0; i < choices.size(); ++i)
      current[i] = choices[i][idx[i]];
    fn(current);
    std::size_t k = 0;
    while (k < choices.size() && ++idx[k] == choices[k].size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == choices.size()) break;
  }
}

// unique map on classes whose value at a class is the lifted class map taken
// at any representative's source; nullopt with witness when members disagree
std::optional<FinMap> factor_source_map(const Monad& T, const FinMap& d1,
                                        const FinMap& q1, const FinMap& q0,
                                        std::string* witness) {
  const FinSetObj& classes = q1.cod();
  std::vector<Elem> vals;
  vals.reserve(classes.size());
  for (const Elem& rep : classes) vals.push_back(T.map_elem(q0, d1(rep)));
  for (const Elem& g : q1.dom()) {
    const Elem& expect = vals[classes.index_of(q1(g))];
    Elem got = T.map_elem(q0, d1(g));
    if (!(got == expect)) {
      if (witness)
        *witness = "class " + q1(g).str() + " splits: " + got.str() + " vs " +
                   expect.str();
      return std::nullopt;
    }
  }
  return FinMap(classes, FinSetObj(vals), vals);
}

// composition table on classes, keyed by the class of the outer morphism and
// the lifted class of the tail; nullopt with witness on a conflict
std::optional<std::vector<std::pair<Elem, Elem>>> factor_comp_table(
    const Monad& T, const TMulticategory& v, const FinMap& q1,
    std::string* witness) {
  std::map<Elem, Elem> table;
  for (const Elem& xi : v.x2()) {
    Elem key = Elem::pair(q1(xi.first()), T.map_elem(q1, xi.second()));
    Elem val = q1(v.comp()(xi));
    auto [it, fresh] = table.emplace(key, val);
    if (!fresh && !(it->second == val)) {
      if (witness)
        *witness = "pair " + key.str() + " maps to both " + it->second.str() +
                   " and " + val.str();
      return std::nullopt;
    }
  }
  return std::vector<std::pair<Elem, Elem>>(table.begin(), table.end());
}

// a multicategory together with a functor anchoring it over a fixed one
struct Anchored {
  MulticatPtr v;
  TFunctor a;
};

// All multicategories with carriers of size at most max_carrier anchored over
// x.  The anchor pins every structure choice to a fiber, and unit cells of
// the composition are filled in directly, so the odometers stay small.
std::vector<Anchored> enumerate_anchored(const MulticatPtr& x,
                                         int max_carrier) {
  std::vector<Anchored> out;
  const Monad& T = *x->monad();
  for (int n0 = 0; n0 <= max_carrier; ++n0) {
    FinSetObj v0 = canonical_atoms("b", static_cast<std::size_t>(n0));
    for (int n1 = 0; n1 <= max_carrier; ++n1) {
      FinSetObj v1 = canonical_atoms("m", static_cast<std::size_t>(n1));
      for (const FinMap& a0 : all_maps(v0, x->x0())) {
        for (const FinMap& a1 : all_maps(v1, x->x1())) {
          std::vector<std::vector<Elem>> d0c, d1c, s0c;
          bool dead = false;
          for (const Elem& g : v1) {
            d0c.push_back(fiber(a0, x->d0()(a1(g))).elements());
            d1c.push_back(T.fiber(a0, x->d1()(a1(g))).elements());
            if (d0c.back().empty() || d1c.back().empty()) {
              dead = true;
              break;
            }
          }
          for (std::size_t i = 0; !dead && i < v0.size(); ++i) {
            s0c.push_back(fiber(a1, x->s0()(a0(v0.elements()[i]))).elements());
            if (s0c.back().empty()) dead = true;
          }
          if (dead) continue;
          std::vector<std::vector<Elem>> blocks;
          blocks.insert(blocks.end(), d0c.begin(), d0c.end());
          blocks.insert(blocks.end(), d1c.begin(), d1c.end());
          blocks.insert(blocks.end(), s0c.begin(), s0c.end());
          for_each_choice(blocks, [&](const std::vector<Elem>& pick) {
            const std::size_t n = v1.size();
            std::vector<Elem> d0v(pick.begin(), pick.begin() + n);
            std::vector<Elem> d1v(pick.begin() + n, pick.begin() + 2 * n);
            std::vector<Elem> s0v(pick.begin() + 2 * n, pick.end());
            FinMap d0cand(v1, v0, d0v);
            FinMap d1cand(v1, FinSetObj(d1v), d1v);
            FinMap s0cand(v0, v1, s0v);
            PullbackSquare ps = t_pullback(T, d1cand, d0cand);
            std::vector<std::vector<Elem>> compc;
            compc.reserve(ps.apex.size());
            bool bad = false;
            for (const Elem& xi : ps.apex) {
              const Elem& g = xi.first();
              const Elem& fs = xi.second();
              Elem downstairs =
                  x->comp()(Elem::pair(a1(g), T.map_elem(a1, fs)));
              Elem req_src = T.mult(T.map_elem(d1cand, fs));
              std::vector<Elem> cands;
              for (const Elem& c : v1.elements())
                if (a1(c) == downstairs && d0cand(c) == d0cand(g) &&
                    d1cand(c) == req_src)
                  cands.push_back(c);
              if (fs == T.map_elem(s0cand, d1cand(g))) {
                // tail of lifted identities: the composite must be g itself
                if (std::find(cands.begin(), cands.end(), g) == cands.end()) {
                  bad = true;
                  break;
                }
                cands = {g};
              }
              for (const Elem& h : v1.elements()) {
                if (fs == T.unit(h) && g == s0cand(d0cand(h))) {
                  // degenerate outer: the composite must be the tail morphism
                  if (std::find(cands.begin(), cands.end(), h) == cands.end())
                    bad = true;
                  else
                    cands = {h};
                  break;
                }
              }
              if (bad || cands.empty()) {
                bad = true;
                break;
              }
              compc.push_back(std::move(cands));
            }
            if (bad) return;
            for_each_choice(compc, [&](const std::vector<Elem>& cp) {
              std::vector<std::pair<Elem, Elem>> graph;
              graph.reserve(cp.size());
              for (std::size_t i = 0; i < cp.size(); ++i)
                graph.emplace_back(ps.apex.elements()[i], cp[i]);
              MulticatPtr mc;
              try {
                mc = make_multicat(x->monad(), v0, v1, d0cand, d1cand, s0cand,
                                   graph);
              } catch (const Error&) {
                return;
              }
              if (!validate_multicategory(*mc).ok()) return;
              out.push_back({mc, TFunctor{mc, x, a0, a1}});
            });
          });
        }
      }
    }
  }
  return out;
}

// serialization of the datum conjugated by carrier permutations; rows that
// carry composite tokens are re-sorted after renaming
std::string conjugate_key(const Monad& T, const MultiDescentDatum& d,
                          const FinMap& s0, const FinMap& s1) {
  const FinMap i0 = inverse(s0);
  const FinMap i1 = inverse(s1);
  const TMulticategory& v = *d.v;
  std::ostringstream os;
  os << v.x0().size() << '/' << v.x1().size();
  auto emit = [&os](const char* tag, const FinSetObj& dom,
                    const std::function<Elem(const Elem&)>& f) {
    os << '|' << tag << ':';
    for (const Elem& e : dom) os << f(e).str() << ';';
  };
  emit("a0", v.x0(), [&](const Elem& b) { return d.a.p0(i0(b)); });
  emit("a1", v.x1(), [&](const Elem& m) { return d.a.p1(i1(m)); });
  emit("d0", v.x1(), [&](const Elem& m) { return s0(v.d0()(i1(m))); });
  emit("d1", v.x1(),
       [&](const Elem& m) { return T.map_elem(s0, v.d1()(i1(m))); });
  emit("s0", v.x0(), [&](const Elem& b) { return s1(v.s0()(i0(b))); });
  std::vector<std::string> rows;
  for (const Elem& xi : v.x2()) {
    Elem key = Elem::pair(s1(xi.first()), T.map_elem(s1, xi.second()));
    rows.push_back(key.str() + ">" + s1(v.comp()(xi)).str());
  }
  std::sort(rows.begin(), rows.end());
  os << "|comp:";
  for (const auto& row : rows) os << row << ';';
  rows.clear();
  for (const Elem& t : d.gamma0.dom())
    rows.push_back("(" + t.first().str() + "," + s0(t.second()).str() + ")>" +
                   s0(d.gamma0(t)).str());
  std::sort(rows.begin(), rows.end());
  os << "|g0:";
  for (const auto& row : rows) os << row << ';';
  rows.clear();
  for (const Elem& t : d.gamma1.dom())
    rows.push_back("(" + t.first().str() + "," + s1(t.second()).str() + ")>" +
                   s1(d.gamma1(t)).str());
  std::sort(rows.begin(), rows.end());
  os << "|g1:";
  for (const auto& row : rows) os << row << ';';
  return os.str();
}

std::string datum_key(const Monad& T, const MultiDescentDatum& d) {
  std::string best;
  for (const FinMap& s0 : all_bijections(d.v->x0(), d.v->x0()))
    for (const FinMap& s1 : all_bijections(d.v->x1(), d.v->x1())) {
      std::string k = conjugate_key(T, d, s0, s1);
      if (best.empty() || k < best) best = std::move(k);
    }
  return best;
}

std::string describe_datum(const MultiDescentDatum& d) {
  return "carriers " + d.v->x0().str() + " / " + d.v->x1().str() +
         ", anchor " + d.a.p0.str() + " ; " + d.a.p1.str();
}

// Full and faithful spot checks for the comparison construction, over slice
// morphisms between the first few objects downstairs.  Pairs whose morphism
// or matched-pair searches would blow past the caps are skipped, never
// counted against the result.
void comparison_spot_checks(const std::vector<Anchored>& base,
                            const std::vector<MultiDescentDatum>& base_data,
                            OracleOutcome& out) {
  const std::size_t cap = std::min<std::size_t>(base.size(), 6);
  auto map_count = [](const FinSetObj& dm, const FinSetObj& cd) {
    return std::pow(static_cast<double>(cd.size()),
                    static_cast<double>(dm.size()));
  };
  for (std::size_t i = 0; i < cap; ++i) {
    for (std::size_t j = 0; j < cap; ++j) {
      const Anchored& A = base[i];
      const Anchored& B = base[j];
      if (map_count(A.v->x0(), B.v->x0()) * map_count(A.v->x1(), B.v->x1()) >
          4096)
        continue;
      std::vector<TFunctor> us;
      for (const FinMap& u0 : all_maps(A.v->x0(), B.v->x0())) {
        if (!compose(B.a.p0, u0).pointwise_equal(A.a.p0)) continue;
        for (const FinMap& u1 : all_maps(A.v->x1(), B.v->x1())) {
          if (!compose(B.a.p1, u1).pointwise_equal(A.a.p1)) continue;
          TFunctor u{A.v, B.v, u0, u1};
          if (validate_functor(u).ok()) us.push_back(std::move(u));
        }
      }
      const MultiDescentDatum& ka = base_data[i];
      const MultiDescentDatum& kb = base_data[j];
      std::set<std::string> induced;
      for (const TFunctor& u : us) {
        FinMap k0 =
            FinMap::from_rule(ka.v->x0(), kb.v->x0(), [&](const Elem& z) {
              return Elem::pair(z.first(), u.p0(z.second()));
            });
        FinMap k1 =
            FinMap::from_rule(ka.v->x1(), kb.v->x1(), [&](const Elem& z) {
              return Elem::pair(z.first(), u.p1(z.second()));
            });
        if (!induced.insert(k0.str() + "#" + k1.str()).second)
          out.comparison_faithful = false;
      }
      // datum morphisms keep the base component of each matched pair
      std::vector<std::vector<Elem>> ch0, ch1;
      bool no_morphism = false;
      double t_count = 1;
      for (const Elem& z : ka.v->x0()) {
        std::vector<Elem> c;
        for (const Elem& w : kb.v->x0())
          if (w.first() == z.first()) c.push_back(w);
        if (c.empty()) {
          no_morphism = true;
          break;
        }
        t_count *= static_cast<double>(c.size());
        ch0.push_back(std::move(c));
      }
      for (const Elem& z : ka.v->x1()) {
        if (no_morphism) break;
        std::vector<Elem> c;
        for (const Elem& w : kb.v->x1())
          if (w.first() == z.first()) c.push_back(w);
        if (c.empty()) {
          no_morphism = true;
          break;
        }
        t_count *= static_cast<double>(c.size());
        ch1.push_back(std::move(c));
      }
      if (no_morphism || t_count > 20000) continue;
      for_each_choice(ch0, [&](const std::vector<Elem>& pick0) {
        FinMap t0(ka.v->x0(), kb.v->x0(), pick0);
        for (const Elem& cell : ka.gamma0.dom()) {
          if (!(t0(ka.gamma0(cell)) ==
                kb.gamma0(Elem::pair(cell.first(), t0(cell.second())))))
            return;
        }
        for_each_choice(ch1, [&](const std::vector<Elem>& pick1) {
          FinMap t1(ka.v->x1(), kb.v->x1(), pick1);
          for (const Elem& cell : ka.gamma1.dom()) {
            if (!(t1(ka.gamma1(cell)) ==
                  kb.gamma1(Elem::pair(cell.first(), t1(cell.second())))))
              return;
          }
          TFunctor t{ka.v, kb.v, t0, t1};
          if (!validate_functor(t).ok()) return;
          if (!induced.count(t0.str() + "#" + t1.str()))
            out.comparison_full = false;
        });
      });
    }
  }
}

}  // namespace

// ---- sets ----

DescentClasses descent_classes(const FinMap& p) {
  const bool s = is_surjective(p);
  return {s, s, s};
}

PullbackSquare reindex_square(const FinMap& p, const FinMap& a) {
  return chosen_pullback(compose(p, a), p);
}

Report check_descent_datum(const FinMap& p, const SetDescentDatum& d) {
  Report r;
  const bool anchored = d.a.cod() == p.dom();
  r.add("anchor lands in the source of the map", anchored,
        anchored ? ""
                 : "anchor into " + d.a.cod().str() + ", map from " +
                       p.dom().str());
  if (!anchored) return r;
  PullbackSquare u = reindex_square(p, d.a);
  const bool typed = d.gamma.dom() == u.apex && d.gamma.cod() == d.a.dom();
  r.add("reindexing is defined on the matched pairs", typed,
        typed ? "" : "expected " + u.apex.str() + " -> " + d.a.dom().str());
  if (!typed) return r;

  bool ok = true;
  std::string w;
  for (const Elem& t : u.apex) {
    if (!(d.a(d.gamma(t)) == t.first())) {
      ok = false;
      w = "at " + t.str();
      break;
    }
  }
  r.add("reindexing matches the anchor", ok, w);
  const bool anchor_law = ok;

  ok = true;
  w.clear();
  for (const Elem& b : d.a.dom()) {
    if (!(d.gamma(Elem::pair(d.a(b), b)) == b)) {
      ok = false;
      w = "at " + b.str();
      break;
    }
  }
  r.add("reindexing fixes the diagonal", ok, w);

  // without the anchor law the transitivity sides can leave the domain
  if (!anchor_law) return r;
  ok = true;
  w.clear();
  PullbackSquare u2 = chosen_pullback(compose(p, u.leg_p), p);
  for (const Elem& t : u2.apex) {
    const Elem& fresh = t.first();
    const Elem& cell = t.second();
    Elem lhs = d.gamma(Elem::pair(fresh, cell.second()));
    Elem rhs = d.gamma(Elem::pair(fresh, d.gamma(cell)));
    if (!(lhs == rhs)) {
      ok = false;
      w = "at " + t.str();
      break;
    }
  }
  r.add("reindexing is transitive over the base", ok, w);
  return r;
}

SetDescentDatum comparison_datum(const FinMap& p, const FinMap& f) {
  PullbackSquare v = chosen_pullback(f, p);
  FinMap a = v.leg_p;
  PullbackSquare u = reindex_square(p, a);
  FinMap gamma = FinMap::from_rule(u.apex, v.apex, [](const Elem& t) {
    return Elem::pair(t.first(), t.second().second());
  });
  return {a, gamma};
}

SetDescentInverse set_descent_inverse(const FinMap& p,
                                      const SetDescentDatum& d) {
  if (!is_surjective(p))
    throw BoundaryError("descent inverse needs an onto map, " +
                        surj_witness(p));
  Report chk = check_descent_datum(p, d);
  if (!chk.ok())
    throw CommutationError("not a descent datum: " + first_failure(chk));

  const FinSetObj& v = d.a.dom();
  PullbackSquare u = reindex_square(p, d.a);
  Dsu dsu(v.size());
  for (const Elem& t : u.apex)
    dsu.unite(v.index_of(t.second()), v.index_of(d.gamma(t)));

  std::vector<Elem> reps;
  reps.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    reps.push_back(v.elements()[dsu.find(i)]);
  FinSetObj w(reps);
  FinMap quot(v, w, reps);

  std::vector<Elem> f_imgs;
  f_imgs.reserve(w.size());
  for (const Elem& rep : w) f_imgs.push_back(p(d.a(rep)));
  for (const Elem& b : v) {
    if (!(p(d.a(b)) == p(d.a(quot(b)))))
      throw CommutationError("orbit of " + b.str() +
                             " is not constant over the base");
  }
  FinMap f(w, p.cod(), f_imgs);

  PullbackSquare sq = chosen_pullback(f, p);
  FinMap iso = FinMap::from_rule(v, sq.apex, [&](const Elem& b) {
    return Elem::pair(d.a(b), quot(b));
  });
  if (!is_bijective(iso))
    throw CommutationError("descent inverse comparison is not a bijection");
  for (const Elem& t : u.apex) {
    if (!(iso(d.gamma(t)) == Elem::pair(t.first(), quot(t.second()))))
      throw CommutationError(
          "descent inverse comparison does not respect the reindexing at " +
          t.str());
  }
  return {f, quot, iso};
}

bool data_isomorphic(const FinMap& p, const SetDescentDatum& x,
                     const SetDescentDatum& y) {
  if (x.a.cod() != p.dom() || y.a.cod() != p.dom()) return false;
  for (const FinMap& t : all_bijections(x.a.dom(), y.a.dom())) {
    if (!compose(y.a, t).pointwise_equal(x.a)) continue;
    bool ok = true;
    for (const Elem& cell : x.gamma.dom()) {
      if (!(t(x.gamma(cell)) ==
            y.gamma(Elem::pair(cell.first(), t(cell.second()))))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool image_condition(const FinMap& p, const FinMap& f,
                     const SetDescentDatum& d, const FinMap& phi) {
  PullbackSquare vf = chosen_pullback(f, p);
  if (phi.dom() != vf.apex || phi.cod() != d.a.dom() || !is_bijective(phi))
    throw BoundaryError(
        "comparison candidate must be a bijection from the matched pairs "
        "onto the carrier");
  if (!compose(d.a, phi).pointwise_equal(vf.leg_p))
    throw BoundaryError("comparison candidate does not match the anchors");
  FinMap back = inverse(phi);
  for (const Elem& cell : d.gamma.dom()) {
    if (!(back(d.gamma(cell)).second() == back(cell.second()).second()))
      return false;
  }
  return true;
}

std::optional<FinMap> find_comparison_match(const FinMap& p, const FinMap& f,
                                            const SetDescentDatum& d) {
  PullbackSquare vf = chosen_pullback(f, p);
  for (const FinMap& phi : all_bijections(vf.apex, d.a.dom())) {
    if (!compose(d.a, phi).pointwise_equal(vf.leg_p)) continue;
    if (image_condition(p, f, d, phi)) return phi;
  }
  return std::nullopt;
}

std::vector<FinMap> enumerate_reindexings(const FinMap& p, const FinMap& a) {
  if (a.cod() != p.dom())
    throw BoundaryError("anchor into " + a.cod().str() +
                        " does not land in the source of the map");
  PullbackSquare u = reindex_square(p, a);
  std::vector<std::vector<Elem>> choices;
  choices.reserve(u.apex.size());
  for (const Elem& t : u.apex) {
    const Elem& alpha = t.first();
    const Elem& b = t.second();
    if (alpha == a(b)) {
      choices.push_back({b});
      continue;
    }
    std::vector<Elem> c = fiber(a, alpha).elements();
    if (c.empty()) return {};
    choices.push_back(std::move(c));
  }
  std::vector<FinMap> out;
  for_each_choice(choices, [&](const std::vector<Elem>& pick) {
    FinMap gamma(u.apex, a.dom(), pick);
    if (check_descent_datum(p, {a, gamma}).ok()) out.push_back(std::move(gamma));
  });
  return out;
}

// ---- multicategories ----

CriterionResult lifted_cover_criterion(const TFunctor& p, int length_bound) {
  CriterionResult out;
  const Monad& T = *p.src->monad();
  FinMap p2 = induced_on_pairs(p);
  FinMap p3 = induced_on_triples(p);

  const bool s1 = is_surjective(p.p1);
  const bool e1 = t_reflects_surjectivity(T, p.p1, length_bound);
  out.details.add("lift of the morphism level is onto", s1 && e1,
                  !s1 ? surj_witness(p.p1)
                      : (e1 ? "" : "lift behaviour not confirmed within the "
                                   "length bound"));
  const bool s2 = is_surjective(p2);
  const bool e2 = t_reflects_surjectivity(T, p2, length_bound);
  out.details.add("lift of the pair level is onto", s2 && e2,
                  !s2 ? surj_witness(p2)
                      : (e2 ? "" : "lift behaviour not confirmed within the "
                                   "length bound"));
  const bool s3 = is_surjective(p3);
  out.details.add("triple level is onto", s3, s3 ? "" : surj_witness(p3));
  out.verdict = s1 && e1 && s2 && e2 && s3;
  return out;
}

CriterionResult level_cover_criterion(const TFunctor& p) {
  CriterionResult out;
  SurjectivityProfile prof = surjectivity_profile(p);
  FinMap p2 = induced_on_pairs(p);
  FinMap p3 = induced_on_triples(p);
  out.details.add("morphism level is onto", prof.p1,
                  prof.p1 ? "" : surj_witness(p.p1));
  out.details.add("pair level is onto", prof.p2,
                  prof.p2 ? "" : surj_witness(p2));
  out.details.add("triple level is onto", prof.p3,
                  prof.p3 ? "" : surj_witness(p3));
  out.verdict = prof.p1 && prof.p2 && prof.p3;

  const Monad& T = *p.src->monad();
  out.details.add("monad preserves kernel pairs at small bounds",
                  check_kernel_pair_preservation(T, 2, 2).ok());
  out.details.add("onto morphism level forces onto object level",
                  !prof.p1 || prof.p0,
                  (!prof.p1 || prof.p0) ? "" : surj_witness(p.p0));
  if (prof.p1 && prof.p2) {
    CriterionResult re = regular_epi_check(p);
    out.details.add("functor is the quotient of its kernel pair", re.verdict,
                    re.verdict ? "" : first_failure(re.details));
  } else {
    out.details.note("kernel pair quotient not attempted without onto levels");
  }
  return out;
}

CriterionResult regular_epi_check(const TFunctor& p) {
  CriterionResult out;
  Report& r = out.details;
  const bool s0 = is_surjective(p.p0);
  const bool s1 = is_surjective(p.p1);
  r.add("object level is onto", s0, s0 ? "" : surj_witness(p.p0));
  r.add("morphism level is onto", s1, s1 ? "" : surj_witness(p.p1));
  if (!(s0 && s1)) return out;

  const Monad& T = *p.src->monad();
  Coequalizer c0 = coequalizer_of_kernel_pair(p.p0);
  Coequalizer c1 = coequalizer_of_kernel_pair(p.p1);
  std::string w;
  auto d0w = factor_map(p.src->d0(), c1.proj, c0.proj, &w);
  if (!d0w) {
    r.add("target map passes to the classes", false, w);
    return out;
  }
  auto s0w = factor_map(p.src->s0(), c0.proj, c1.proj, &w);
  if (!s0w) {
    r.add("identity map passes to the classes", false, w);
    return out;
  }
  auto d1w = factor_source_map(T, p.src->d1(), c1.proj, c0.proj, &w);
  if (!d1w) {
    r.add("source map passes to the classes", false, w);
    return out;
  }
  auto table = factor_comp_table(T, *p.src, c1.proj, &w);
  if (!table) {
    r.add("composition passes to the classes", false, w);
    return out;
  }
  MulticatPtr q;
  try {
    q = make_multicat(p.src->monad(), c0.quotient, c1.quotient, *d0w, *d1w,
                      *s0w, *table);
  } catch (const Error& e) {
    r.add("classes form a multicategory", false, e.what());
    return out;
  }
  Report val = validate_multicategory(*q);
  r.add("classes form a multicategory", val.ok(),
        val.ok() ? "" : first_failure(val));
  if (!val.ok()) return out;

  TFunctor e{q, p.tgt, c0.embed, c1.embed};
  Report ef = validate_functor(e);
  const bool bij = is_bijective(c0.embed) && is_bijective(c1.embed);
  r.add("induced comparison is an isomorphism onto the target",
        ef.ok() && bij, ef.ok() ? (bij ? "" : "comparison not bijective")
                                : first_failure(ef));
  out.verdict = r.ok();
  return out;
}

Classification classify_functor(const TFunctor& p) {
  return {surjectivity_profile(p), lifted_cover_criterion(p).verdict,
          level_cover_criterion(p).verdict};
}

Report check_multicat_datum(const TFunctor& p, const MultiDescentDatum& d) {
  Report r;
  const bool carrier_ok = same_structure(d.v, d.a.src);
  r.add("datum carrier is the anchor source", carrier_ok);
  const bool lands = same_structure(d.a.tgt, p.src);
  r.add("anchor lands in the source of the functor", lands);
  if (!carrier_ok || !lands) return r;
  r.merge(validate_functor(d.a), "anchor: ");
  r.merge(check_descent_datum(p.p0, {d.a.p0, d.gamma0}), "objects: ");
  r.merge(check_descent_datum(p.p1, {d.a.p1, d.gamma1}), "morphisms: ");
  if (!r.ok()) return r;
  try {
    MulticatPullbackSquare u =
        pullback_multicat(p, compose_functors(p, d.a));
    TFunctor g{u.object, d.v, d.gamma0, d.gamma1};
    r.merge(validate_functor(g), "reindexing: ");
  } catch (const Error& e) {
    r.add("matched pairs form a multicategory", false, e.what());
  }
  return r;
}

MultiDescentDatum comparison_multicat_datum(const TFunctor& p,
                                            const TFunctor& f) {
  MulticatPullbackSquare sq = pullback_multicat(p, f);
  TFunctor a = sq.to_f_source;
  PullbackSquare u0 = reindex_square(p.p0, a.p0);
  FinMap g0 = FinMap::from_rule(u0.apex, sq.object->x0(), [](const Elem& t) {
    return Elem::pair(t.first(), t.second().second());
  });
  PullbackSquare u1 = reindex_square(p.p1, a.p1);
  FinMap g1 = FinMap::from_rule(u1.apex, sq.object->x1(), [](const Elem& t) {
    return Elem::pair(t.first(), t.second().second());
  });
  return {sq.object, a, g0, g1};
}

MultiDescentQuotient multicat_descent_quotient(const TFunctor& p,
                                               const MultiDescentDatum& d) {
  Report chk = check_multicat_datum(p, d);
  if (!chk.ok())
    throw CommutationError("not a descent datum: " + first_failure(chk));

  const Monad& T = *d.v->monad();
  SetDescentInverse i0 = set_descent_inverse(p.p0, {d.a.p0, d.gamma0});
  SetDescentInverse i1 = set_descent_inverse(p.p1, {d.a.p1, d.gamma1});

  std::string w;
  auto d0w = factor_map(d.v->d0(), i1.quot, i0.quot, &w);
  if (!d0w)
    throw CommutationError(
        "datum does not pass to the orbit classes at the target map: " + w);
  auto s0w = factor_map(d.v->s0(), i0.quot, i1.quot, &w);
  if (!s0w)
    throw CommutationError(
        "datum does not pass to the orbit classes at the identity map: " + w);
  auto d1w = factor_source_map(T, d.v->d1(), i1.quot, i0.quot, &w);
  if (!d1w)
    throw CommutationError(
        "datum does not pass to the orbit classes at the source map: " + w);
  auto table = factor_comp_table(T, *d.v, i1.quot, &w);
  if (!table)
    throw CommutationError(
        "datum does not pass to the orbit classes at composition: " + w);

  MulticatPtr wmc;
  try {
    wmc = make_multicat(d.v->monad(), i0.quot.cod(), i1.quot.cod(), *d0w,
                        *d1w, *s0w, *table);
  } catch (const Error& e) {
    throw CommutationError("datum does not pass to the orbit classes: " +
                           std::string(e.what()));
  }
  Report val = validate_multicategory(*wmc);
  if (!val.ok())
    throw CommutationError("orbit classes are not a multicategory: " +
                           first_failure(val));

  TFunctor f{wmc, p.tgt, i0.f, i1.f};
  Report rf = validate_functor(f);
  if (!rf.ok())
    throw CommutationError("descended object is not a functor: " +
                           first_failure(rf));
  TFunctor h{d.v, wmc, i0.quot, i1.quot};
  Report rh = validate_functor(h);
  if (!rh.ok())
    throw CommutationError("class projection is not a functor: " +
                           first_failure(rh));
  return {wmc, f, h};
}

bool multicat_data_isomorphic(const TFunctor& p, const MultiDescentDatum& x,
                              const MultiDescentDatum& y) {
  if (!same_structure(x.a.tgt, p.src) || !same_structure(y.a.tgt, p.src))
    return false;
  for (const FinMap& t0 : all_bijections(x.v->x0(), y.v->x0())) {
    if (!compose(y.a.p0, t0).pointwise_equal(x.a.p0)) continue;
    bool g0ok = true;
    for (const Elem& cell : x.gamma0.dom()) {
      if (!(t0(x.gamma0(cell)) ==
            y.gamma0(Elem::pair(cell.first(), t0(cell.second()))))) {
        g0ok = false;
        break;
      }
    }
    if (!g0ok) continue;
    for (const FinMap& t1 : all_bijections(x.v->x1(), y.v->x1())) {
      if (!compose(y.a.p1, t1).pointwise_equal(x.a.p1)) continue;
      bool ok = true;
      for (const Elem& cell : x.gamma1.dom()) {
        if (!(t1(x.gamma1(cell)) ==
              y.gamma1(Elem::pair(cell.first(), t1(cell.second()))))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      TFunctor t{x.v, y.v, t0, t1};
      if (validate_functor(t).ok()) return true;
    }
  }
  return false;
}

std::vector<MultiDescentDatum> enumerate_multicat_data(const TFunctor& p,
                                                       int max_carrier) {
  std::vector<MultiDescentDatum> out;
  std::set<std::string> seen;
  const Monad& T = *p.src->monad();
  for (const Anchored& av : enumerate_anchored(p.src, max_carrier)) {
    std::vector<FinMap> g0s = enumerate_reindexings(p.p0, av.a.p0);
    if (g0s.empty()) continue;
    std::vector<FinMap> g1s = enumerate_reindexings(p.p1, av.a.p1);
    if (g1s.empty()) continue;
    MulticatPullbackSquare usq;
    try {
      usq = pullback_multicat(p, compose_functors(p, av.a));
    } catch (const Error&) {
      continue;
    }
    for (const FinMap& g0 : g0s) {
      for (const FinMap& g1 : g1s) {
        TFunctor gf{usq.object, av.v, g0, g1};
        if (!validate_functor(gf).ok()) continue;
        MultiDescentDatum d{av.v, av.a, g0, g1};
        if (seen.insert(datum_key(T, d)).second) out.push_back(std::move(d));
      }
    }
  }
  return out;
}

OracleOutcome brute_force_oracle(const TFunctor& p, int max_carrier,
                                 int jobs) {
  OracleOutcome out;
  out.bound = max_carrier;
  if (max_carrier <= 0) {
    out.status = "inconclusive";
    return out;
  }

  std::vector<MultiDescentDatum> data = enumerate_multicat_data(p, max_carrier);
  out.data_checked = static_cast<int>(data.size());

  std::vector<Anchored> base = enumerate_anchored(p.tgt, max_carrier);
  std::vector<MultiDescentDatum> base_data;
  base_data.reserve(base.size());
  for (const Anchored& c : base)
    base_data.push_back(comparison_multicat_datum(p, c.a));

  // With both levels onto, the orbit quotient is total: a round trip that
  // fails, or a datum that does not quotient and matches no candidate, is a
  // genuine counterexample.  Otherwise only the bounded direct search runs
  // and a miss stays inconclusive.
  const bool quotient_path = is_surjective(p.p0) && is_surjective(p.p1);

  auto process = [&](const MultiDescentDatum& d) -> std::optional<std::string> {
    if (quotient_path) {
      try {
        MultiDescentQuotient q = multicat_descent_quotient(p, d);
        MultiDescentDatum k = comparison_multicat_datum(p, q.f);
        if (multicat_data_isomorphic(p, d, k)) return std::nullopt;
      } catch (const Error&) {
      }
    }
    for (const MultiDescentDatum& k : base_data)
      if (multicat_data_isomorphic(p, d, k)) return std::nullopt;
    return "no object over the target induces the datum with " +
           describe_datum(d);
  };

  std::vector<std::string> failures;
  int nthreads = jobs < 1 ? 1 : jobs;
  if (data.size() < static_cast<std::size_t>(nthreads))
    nthreads = data.empty() ? 1 : static_cast<int>(data.size());
  if (nthreads <= 1) {
    for (const auto& d : data)
      if (auto fail = process(d)) failures.push_back(*fail);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex mtx;
    auto work = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= data.size()) break;
        if (auto fail = process(data[i])) {
          std::lock_guard<std::mutex> lk(mtx);
          failures.push_back(*fail);
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::sort(failures.begin(), failures.end());
  out.failures = std::move(failures);

  comparison_spot_checks(base, base_data, out);

  if (!out.failures.empty())
    out.status = quotient_path ? "counterexample" : "inconclusive";
  else if (level_cover_criterion(p).verdict)
    out.status = "clean";
  else
    out.status = "inconclusive";
  return out;
}

}  // namespace tmcat
