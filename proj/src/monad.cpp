#include "tmcat/monad.hpp"

#include <algorithm>
#include <map>

namespace tmcat {

// ---- Carrier ----

Carrier Carrier::finite(FinSetObj xs) {
  Carrier c;
  c.kind_ = Kind::finite;
  c.set_ = std::move(xs);
  return c;
}

Carrier Carrier::lists_over(Carrier base) {
  Carrier c;
  c.kind_ = Kind::lists;
  c.base_ = std::make_shared<const Carrier>(std::move(base));
  return c;
}

const FinSetObj& Carrier::set() const {
  if (kind_ != Kind::finite)
    throw BoundaryError("set() on a list carrier " + str());
  return set_;
}

const Carrier& Carrier::base() const {
  if (kind_ != Kind::lists)
    throw BoundaryError("base() on a finite carrier " + str());
  return *base_;
}

bool Carrier::contains(const Elem& t) const {
  if (kind_ == Kind::finite) return set_.contains(t);
  if (!t.is_list()) return false;
  for (const Elem& x : t.items())
    if (!base_->contains(x)) return false;
  return true;
}

std::vector<Elem> Carrier::enumerate(int length_bound) const {
  if (kind_ == Kind::finite) return set_.elements();
  std::vector<Elem> base_elems = base_->enumerate(length_bound);
  std::vector<Elem> out;
  std::vector<std::size_t> pick;
  // lists of each length 0..bound over base_elems, shortest first
  out.push_back(Elem::list({}));
  const int bound = std::max(length_bound, 0);
  for (int len = 1; len <= bound; ++len) {
    if (base_elems.empty()) break;
    pick.assign(static_cast<std::size_t>(len), 0);
    for (;;) {
      std::vector<Elem> items;
      items.reserve(pick.size());
      for (std::size_t i : pick) items.push_back(base_elems[i]);
      out.push_back(Elem::list(std::move(items)));
      std::size_t k = pick.size();
      bool rolled = true;
      while (k > 0) {
        --k;
        if (++pick[k] < base_elems.size()) {
          rolled = false;
          break;
        }
        pick[k] = 0;
      }
      if (rolled) break;
    }
  }
  return out;
}

std::string Carrier::str() const {
  if (kind_ == Kind::finite) return set_.str();
  return "lists(" + base_->str() + ")";
}

// ---- MonoidTable ----

MonoidTable::MonoidTable(std::vector<Elem> elements, Elem unit,
                         std::vector<std::vector<Elem>> table)
    : elements_(elements), unit_(std::move(unit)) {
  const std::size_t n = elements.size();
  if (elements_.size() != n)
    throw BoundaryError("monoid element list contains duplicates");
  if (!elements_.contains(unit_))
    throw BoundaryError("monoid unit " + unit_.str() +
                        " is not one of the elements");
  if (table.size() != n)
    throw BoundaryError("monoid table must have one row per element");
  table_.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw BoundaryError("monoid table row " + std::to_string(i) +
                          " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      auto k = elements_.find(table[i][j]);
      if (!k)
        throw BoundaryError("monoid table value " + table[i][j].str() +
                            " at (" + elements[i].str() + "," +
                            elements[j].str() + ") is not an element");
      // table is given in input order; store against sorted indices
      table_[elements_.index_of(elements[i])][elements_.index_of(elements[j])] =
          *k;
    }
  }
  for (const Elem& a : elements_) {
    if (!(product(unit_, a) == a) || !(product(a, unit_) == a))
      throw BoundaryError("monoid unit law fails at " + a.str());
  }
  for (const Elem& a : elements_)
    for (const Elem& b : elements_)
      for (const Elem& c : elements_)
        if (!(product(product(a, b), c) == product(a, product(b, c))))
          throw BoundaryError("monoid associativity fails at (" + a.str() +
                              "," + b.str() + "," + c.str() + ")");
}

MonoidTable MonoidTable::zmod(int n) {
  if (n <= 0) throw BoundaryError("zmod needs a positive modulus");
  std::vector<Elem> es;
  for (int i = 0; i < n; ++i) es.push_back(Elem::atom(std::to_string(i)));
  std::vector<std::vector<Elem>> table(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i)].push_back(
          Elem::atom(std::to_string((i + j) % n)));
  return MonoidTable(es, Elem::atom("0"), table);
}

const Elem& MonoidTable::product(const Elem& a, const Elem& b) const {
  return elements_.elements()[table_[elements_.index_of(a)]
                                    [elements_.index_of(b)]];
}

std::string MonoidTable::str() const {
  std::string out = "monoid" + elements_.str() + ";unit=" + unit_.str() + ";";
  for (const Elem& a : elements_)
    for (const Elem& b : elements_)
      out += product(a, b).str() + ",";
  return out;
}

// ---- Monad base conveniences ----

Elem Monad::map_elem(const FinMap& u, const Elem& t) const {
  return map_elem([&u](const Elem& x) -> Elem { return u.apply(x); }, t);
}

FinSetObj Monad::lift_set(const FinSetObj& x) const {
  if (!finite_carriers())
    throw BoundaryError("cannot materialize " + name() + " carrier over " +
                        x.str());
  return FinSetObj(enumerate_over(x.elements(), 0));
}

FinMap Monad::lift_map(const FinMap& u) const {
  FinSetObj td = lift_set(u.dom());
  FinSetObj tc = lift_set(u.cod());
  return FinMap::from_rule(
      td, tc, [&](const Elem& t) { return map_elem(u, t); });
}

FinMap Monad::map_on(const FinMap& u, const FinSetObj& dom_subset,
                     const FinSetObj& cod) const {
  return FinMap::from_rule(
      dom_subset, cod, [&](const Elem& t) { return map_elem(u, t); });
}

// ---- identity monad ----

namespace {

class IdentityMonad final : public Monad {
 public:
  IdentityMonad() : Monad("identity", "identity", true) {}

  Elem unit(const Elem& x) const override { return x; }
  Elem mult(const Elem& tt) const override { return tt; }

  Elem map_elem(const std::function<Elem(const Elem&)>& rule,
                const Elem& t) const override {
    return rule(t);
  }

  bool member(const std::function<bool(const Elem&)>& base_pred,
              const Elem& t) const override {
    return base_pred(t);
  }

  std::vector<Elem> enumerate_over(const std::vector<Elem>& values,
                                   int) const override {
    std::vector<Elem> out = values;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  FinSetObj fiber(const FinMap& u, const Elem& t) const override {
    return tmcat::fiber(u, t);
  }

  Carrier lift(const Carrier& c) const override { return c; }
};

// T(x) = M x x for a finite monoid M, with unit x |-> (1, x) and
// multiplication (m, (n, x)) |-> (m n, x).
class MonoidActionMonad final : public Monad {
 public:
  explicit MonoidActionMonad(MonoidTable m)
      : Monad("monoid-action", m.str(), true), m_(std::move(m)) {}

  const MonoidTable* monoid_table() const override { return &m_; }

  Elem unit(const Elem& x) const override {
    return Elem::pair(m_.unit(), x);
  }

  Elem mult(const Elem& tt) const override {
    if (!tt.is_pair() || !tt.second().is_pair())
      throw BoundaryError("malformed double action element " + tt.str());
    return Elem::pair(m_.product(tt.first(), tt.second().first()),
                      tt.second().second());
  }

  Elem map_elem(const std::function<Elem(const Elem&)>& rule,
                const Elem& t) const override {
    if (!t.is_pair())
      throw BoundaryError("malformed action element " + t.str());
    return Elem::pair(t.first(), rule(t.second()));
  }

  bool member(const std::function<bool(const Elem&)>& base_pred,
              const Elem& t) const override {
    return t.is_pair() && m_.elements().contains(t.first()) &&
           base_pred(t.second());
  }

  std::vector<Elem> enumerate_over(const std::vector<Elem>& values,
                                   int) const override {
    std::vector<Elem> out;
    out.reserve(m_.elements().size() * values.size());
    for (const Elem& m : m_.elements())
      for (const Elem& v : values) out.push_back(Elem::pair(m, v));
    return out;
  }

  FinSetObj fiber(const FinMap& u, const Elem& t) const override {
    if (!t.is_pair())
      throw BoundaryError("malformed action element " + t.str());
    std::vector<Elem> out;
    for (const Elem& x : tmcat::fiber(u, t.second()))
      out.push_back(Elem::pair(t.first(), x));
    return FinSetObj(std::move(out));
  }

  Carrier lift(const Carrier& c) const override {
    if (!c.is_finite_set())
      throw BoundaryError("monoid action over a non-finite carrier");
    return Carrier::finite(FinSetObj(enumerate_over(c.set().elements(), 0)));
  }

  const MonoidTable& monoid() const { return m_; }

 private:
  MonoidTable m_;
};

// T(x) = finite lists over x, with unit x |-> [x] and multiplication
// = concatenation.  Carriers are never materialized.
class FreeMonoidMonad final : public Monad {
 public:
  FreeMonoidMonad() : Monad("free-monoid", "free-monoid", false) {}

  Elem unit(const Elem& x) const override { return Elem::list({x}); }

  Elem mult(const Elem& tt) const override {
    if (!tt.is_list())
      throw BoundaryError("malformed list-of-lists element " + tt.str());
    std::vector<Elem> out;
    for (const Elem& l : tt.items()) {
      if (!l.is_list())
        throw BoundaryError("malformed list-of-lists element " + tt.str());
      out.insert(out.end(), l.items().begin(), l.items().end());
    }
    return Elem::list(std::move(out));
  }

  Elem map_elem(const std::function<Elem(const Elem&)>& rule,
                const Elem& t) const override {
    if (!t.is_list())
      throw BoundaryError("malformed list element " + t.str());
    std::vector<Elem> out;
    out.reserve(t.items().size());
    for (const Elem& x : t.items()) out.push_back(rule(x));
    return Elem::list(std::move(out));
  }

  bool member(const std::function<bool(const Elem&)>& base_pred,
              const Elem& t) const override {
    if (!t.is_list()) return false;
    for (const Elem& x : t.items())
      if (!base_pred(x)) return false;
    return true;
  }

  std::vector<Elem> enumerate_over(const std::vector<Elem>& values,
                                   int length_bound) const override {
    std::vector<Elem> out;
    out.push_back(Elem::list({}));
    const int bound = std::max(length_bound, 0);
    std::vector<std::size_t> pick;
    for (int len = 1; len <= bound; ++len) {
      if (values.empty()) break;
      pick.assign(static_cast<std::size_t>(len), 0);
      for (;;) {
        std::vector<Elem> items;
        items.reserve(pick.size());
        for (std::size_t i : pick) items.push_back(values[i]);
        out.push_back(Elem::list(std::move(items)));
        std::size_t k = pick.size();
        bool rolled = true;
        while (k > 0) {
          --k;
          if (++pick[k] < values.size()) {
            rolled = false;
            break;
          }
          pick[k] = 0;
        }
        if (rolled) break;
      }
    }
    return out;
  }

  FinSetObj fiber(const FinMap& u, const Elem& t) const override {
    if (!t.is_list())
      throw BoundaryError("malformed list element " + t.str());
    // product of the coordinate preimages
    std::vector<std::vector<Elem>> choices;
    for (const Elem& y : t.items()) {
      choices.push_back(tmcat::fiber(u, y).elements());
      if (choices.back().empty()) return FinSetObj{};
    }
    std::vector<Elem> out;
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
      std::vector<Elem> items;
      items.reserve(pick.size());
      for (std::size_t i = 0; i < pick.size(); ++i)
        items.push_back(choices[i][pick[i]]);
      out.push_back(Elem::list(std::move(items)));
      std::size_t k = pick.size();
      bool rolled = true;
      while (k > 0) {
        --k;
        if (++pick[k] < choices[k].size()) {
          rolled = false;
          break;
        }
        pick[k] = 0;
      }
      if (rolled || pick.empty()) break;
    }
    return FinSetObj(std::move(out));
  }

  Carrier lift(const Carrier& c) const override {
    return Carrier::lists_over(c);
  }
};

}  // namespace

MonadPtr identity_monad() {
  static const auto instance = std::make_shared<const IdentityMonad>();
  return instance;
}

MonadPtr monoid_action_monad(MonoidTable m) {
  return std::make_shared<const MonoidActionMonad>(std::move(m));
}

MonadPtr free_monoid_monad() {
  static const auto instance = std::make_shared<const FreeMonoidMonad>();
  return instance;
}

// ---- T-pullback ----

PullbackSquare t_pullback(const Monad& T, const FinMap& f, const FinMap& u) {
  // every f-value must be a T(cod u) element
  for (const Elem& t : f.cod())
    if (!T.member([&](const Elem& x) { return u.cod().contains(x); }, t))
      throw BoundaryError("value " + t.str() + " is not a " + T.name() +
                          " element over " + u.cod().str());
  std::vector<Elem> apex_elems;
  std::vector<Elem> tab_elems;
  for (const Elem& a : f.dom()) {
    for (const Elem& s : T.fiber(u, f.apply(a))) {
      apex_elems.push_back(Elem::pair(a, s));
      tab_elems.push_back(s);
    }
  }
  FinSetObj apex(std::move(apex_elems));
  FinSetObj tab(std::move(tab_elems));
  FinMap leg_f = FinMap::from_rule(
      apex, f.dom(), [](const Elem& e) { return e.first(); });
  FinMap leg_p = FinMap::from_rule(
      apex, tab, [](const Elem& e) { return e.second(); });
  FinMap tu = T.map_on(u, tab, f.cod());
  return PullbackSquare{std::move(apex), std::move(leg_p), std::move(leg_f), f,
                        std::move(tu)};
}

// ---- law and cartesianness checks ----

namespace {

std::string shown(const Elem& e) { return e.str(); }

// layered bounded enumeration of T^depth over a base set
std::vector<Elem> enum_tower(const Monad& T, const std::vector<Elem>& base,
                             const std::vector<int>& layer_bounds) {
  std::vector<Elem> cur = base;
  for (int b : layer_bounds) cur = T.enumerate_over(cur, b);
  return cur;
}

}  // namespace

Report check_monad_laws(const Monad& T, int size_bound, int length_bound) {
  Report r;
  const int L = length_bound;
  const int capped = std::min(L, 2);  // nested layers; see note below
  r.note("bounds: size<=" + std::to_string(size_bound) + " length<=" +
         std::to_string(L) + " (nested layers capped at " +
         std::to_string(capped) + ")");
  for (int n = 0; n <= size_bound; ++n) {
    FinSetObj X = canonical_atoms("a", static_cast<std::size_t>(n));
    std::vector<Elem> tx = T.enumerate_over(X.elements(), L);
    // unit laws of mult
    for (const Elem& t : tx) {
      if (!(T.mult(T.unit(t)) == t)) {
        r.add("mult-unit-left", false, shown(t));
        return r;
      }
      Elem te = T.map_elem([&](const Elem& x) { return T.unit(x); }, t);
      if (!(T.mult(te) == t)) {
        r.add("mult-unit-right", false, shown(t));
        return r;
      }
    }
    // associativity of mult on a three-layer tower
    std::vector<Elem> tttx = enum_tower(T, X.elements(), {L, capped, capped});
    for (const Elem& s : tttx) {
      Elem lhs = T.mult(T.mult(s));
      Elem rhs =
          T.mult(T.map_elem([&](const Elem& t) { return T.mult(t); }, s));
      if (!(lhs == rhs)) {
        r.add("mult-associativity", false, shown(s));
        return r;
      }
    }
    // naturality of unit and mult against every small map out of X
    std::vector<Elem> ttx = enum_tower(T, X.elements(), {L, capped});
    for (int m = 0; m <= size_bound; ++m) {
      FinSetObj Y = canonical_atoms("b", static_cast<std::size_t>(m));
      for (const FinMap& u : all_maps(X, Y)) {
        for (const Elem& x : X) {
          if (!(T.map_elem(u, T.unit(x)) == T.unit(u.apply(x)))) {
            r.add("unit-naturality", false,
                  "u=" + u.str() + " x=" + shown(x));
            return r;
          }
        }
        for (const Elem& tt : ttx) {
          Elem lhs = T.map_elem(u, T.mult(tt));
          Elem rhs = T.mult(T.map_elem(
              [&](const Elem& t) { return T.map_elem(u, t); }, tt));
          if (!(lhs == rhs)) {
            r.add("mult-naturality", false,
                  "u=" + u.str() + " tt=" + shown(tt));
            return r;
          }
        }
      }
    }
  }
  r.add("mult-unit-left", true);
  r.add("mult-unit-right", true);
  r.add("mult-associativity", true);
  r.add("unit-naturality", true);
  r.add("mult-naturality", true);
  return r;
}

Report check_cartesian(const Monad& T, int size_bound, int length_bound) {
  Report r;
  const int L = length_bound;
  const int capped = std::min(L, 2);
  r.note("bounds: size<=" + std::to_string(size_bound) + " length<=" +
         std::to_string(L) + " (double layers capped at " +
         std::to_string(capped) + ")");

  bool pullbacks_ok = true, unit_sq_ok = true, mult_sq_ok = true;

  for (int nz = 0; nz <= size_bound && pullbacks_ok; ++nz) {
    FinSetObj Z = canonical_atoms("c", static_cast<std::size_t>(nz));
    for (int nx = 0; nx <= size_bound && pullbacks_ok; ++nx) {
      FinSetObj X = canonical_atoms("a", static_cast<std::size_t>(nx));
      for (int ny = 0; ny <= size_bound && pullbacks_ok; ++ny) {
        FinSetObj Y = canonical_atoms("b", static_cast<std::size_t>(ny));
        for (const FinMap& u1 : all_maps(X, Z)) {
          for (const FinMap& u2 : all_maps(Y, Z)) {
            // T of the chosen pullback square of (u2, u1) must again be a
            // pullback on bounded elements
            PullbackSquare sq = chosen_pullback(u2, u1);
            std::vector<Elem> tapex =
                T.enumerate_over(sq.apex.elements(), L);
            std::vector<Elem> pairs_from_apex;
            pairs_from_apex.reserve(tapex.size());
            for (const Elem& t : tapex)
              pairs_from_apex.push_back(
                  Elem::pair(T.map_elem(sq.leg_p, t), T.map_elem(sq.leg_f, t)));
            std::sort(pairs_from_apex.begin(), pairs_from_apex.end());
            if (std::adjacent_find(pairs_from_apex.begin(),
                                   pairs_from_apex.end()) !=
                pairs_from_apex.end()) {
              r.add("pullback-preservation", false,
                    "comparison not injective for u1=" + u1.str() +
                        " u2=" + u2.str());
              pullbacks_ok = false;
              break;
            }
            std::vector<Elem> matching;
            std::vector<Elem> ts1 = T.enumerate_over(X.elements(), L);
            std::vector<Elem> ts2 = T.enumerate_over(Y.elements(), L);
            std::multimap<Elem, const Elem*> by_image;
            for (const Elem& s2 : ts2)
              by_image.emplace(T.map_elem(u2, s2), &s2);
            for (const Elem& s1 : ts1) {
              auto [lo, hi] = by_image.equal_range(T.map_elem(u1, s1));
              for (auto it = lo; it != hi; ++it)
                matching.push_back(Elem::pair(s1, *it->second));
            }
            std::sort(matching.begin(), matching.end());
            if (!(pairs_from_apex == matching)) {
              r.add("pullback-preservation", false,
                    "comparison not onto matching pairs for u1=" + u1.str() +
                        " u2=" + u2.str());
              pullbacks_ok = false;
              break;
            }
          }
          if (!pullbacks_ok) break;
        }
      }
    }
  }
  r.add("pullback-preservation", pullbacks_ok);

  for (int nx = 0; nx <= size_bound; ++nx) {
    FinSetObj X = canonical_atoms("a", static_cast<std::size_t>(nx));
    std::vector<Elem> ttx = enum_tower(T, X.elements(), {capped, capped});
    std::vector<Elem> tx_bounded = T.enumerate_over(X.elements(), L);
    std::vector<Elem> tx_long =
        T.enumerate_over(X.elements(), capped * capped);
    for (int ny = 0; ny <= size_bound; ++ny) {
      FinSetObj Y = canonical_atoms("b", static_cast<std::size_t>(ny));
      std::vector<Elem> tty = enum_tower(T, Y.elements(), {capped, capped});
      for (const FinMap& u : all_maps(X, Y)) {
        // unit naturality square is a pullback: X = Y x_{TY} TX
        if (unit_sq_ok) {
          std::vector<Elem> got;
          for (const Elem& x : X)
            got.push_back(Elem::pair(u.apply(x), T.unit(x)));
          std::sort(got.begin(), got.end());
          if (std::adjacent_find(got.begin(), got.end()) != got.end()) {
            r.add("unit-square-pullback", false,
                  "comparison not injective for u=" + u.str());
            unit_sq_ok = false;
          } else {
            std::vector<Elem> matching;
            for (const Elem& b : Y) {
              Elem eb = T.unit(b);
              for (const Elem& t : tx_bounded)
                if (T.map_elem(u, t) == eb)
                  matching.push_back(Elem::pair(b, t));
            }
            std::sort(matching.begin(), matching.end());
            if (!(got == matching)) {
              r.add("unit-square-pullback", false,
                    "comparison not onto matching pairs for u=" + u.str());
              unit_sq_ok = false;
            }
          }
        }
        // mult naturality square is a pullback: TTX = TTY x_{TY} TX
        if (mult_sq_ok) {
          std::vector<Elem> got;
          got.reserve(ttx.size());
          for (const Elem& s : ttx)
            got.push_back(Elem::pair(
                T.map_elem([&](const Elem& t) { return T.map_elem(u, t); }, s),
                T.mult(s)));
          std::sort(got.begin(), got.end());
          if (std::adjacent_find(got.begin(), got.end()) != got.end()) {
            r.add("mult-square-pullback", false,
                  "comparison not injective for u=" + u.str());
            mult_sq_ok = false;
          } else {
            std::multimap<Elem, const Elem*> by_image;
            for (const Elem& t : tx_long) by_image.emplace(T.map_elem(u, t), &t);
            std::vector<Elem> matching;
            for (const Elem& tt : tty) {
              auto [lo, hi] = by_image.equal_range(T.mult(tt));
              for (auto it = lo; it != hi; ++it)
                matching.push_back(Elem::pair(tt, *it->second));
            }
            std::sort(matching.begin(), matching.end());
            if (!(got == matching)) {
              r.add("mult-square-pullback", false,
                    "comparison not onto matching pairs for u=" + u.str());
              mult_sq_ok = false;
            }
          }
        }
      }
    }
  }
  r.add("unit-square-pullback", unit_sq_ok);
  r.add("mult-square-pullback", mult_sq_ok);
  return r;
}

Report check_kernel_pair_preservation(const Monad& T, int size_bound,
                                      int length_bound) {
  Report r;
  const int L = length_bound;
  bool ok = true;
  for (int nx = 0; nx <= size_bound && ok; ++nx) {
    FinSetObj X = canonical_atoms("a", static_cast<std::size_t>(nx));
    for (int ny = 0; ny <= size_bound && ok; ++ny) {
      FinSetObj Y = canonical_atoms("b", static_cast<std::size_t>(ny));
      for (const FinMap& f : all_maps(X, Y)) {
        PullbackSquare k = kernel_pair(f);
        std::vector<Elem> got;
        for (const Elem& t : T.enumerate_over(k.apex.elements(), L))
          got.push_back(
              Elem::pair(T.map_elem(k.leg_p, t), T.map_elem(k.leg_f, t)));
        std::sort(got.begin(), got.end());
        if (std::adjacent_find(got.begin(), got.end()) != got.end()) {
          r.add("kernel-pair-preservation", false,
                "comparison not injective for f=" + f.str());
          ok = false;
          break;
        }
        std::vector<Elem> tx = T.enumerate_over(X.elements(), L);
        std::multimap<Elem, const Elem*> by_image;
        for (const Elem& s : tx) by_image.emplace(T.map_elem(f, s), &s);
        std::vector<Elem> matching;
        for (const Elem& s1 : tx) {
          auto [lo, hi] = by_image.equal_range(T.map_elem(f, s1));
          for (auto it = lo; it != hi; ++it)
            matching.push_back(Elem::pair(s1, *it->second));
        }
        std::sort(matching.begin(), matching.end());
        if (!(got == matching)) {
          r.add("kernel-pair-preservation", false,
                "comparison not onto kernel pairs for f=" + f.str());
          ok = false;
          break;
        }
      }
    }
  }
  r.add("kernel-pair-preservation", ok);
  return r;
}

bool t_reflects_surjectivity(const Monad& T, const FinMap& f,
                             int length_bound) {
  bool tf_surjective = true;
  for (const Elem& t : T.enumerate_over(f.cod().elements(), length_bound))
    if (T.fiber(f, t).empty()) {
      tf_surjective = false;
      break;
    }
  return tf_surjective == is_surjective(f);
}

}  // namespace tmcat
