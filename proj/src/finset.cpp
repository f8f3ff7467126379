#include "tmcat/finset.hpp"

#include <algorithm>
#include <sstream>

namespace tmcat {

// ---- Elem ----

Elem Elem::atom(std::string name) {
  Elem e;
  e.kind_ = Kind::atom;
  e.atom_ = std::move(name);
  return e;
}

Elem Elem::pair(Elem first, Elem second) {
  Elem e;
  e.kind_ = Kind::pair;
  e.parts_.reserve(2);
  e.parts_.push_back(std::move(first));
  e.parts_.push_back(std::move(second));
  return e;
}

Elem Elem::list(std::vector<Elem> items) {
  Elem e;
  e.kind_ = Kind::list;
  e.parts_ = std::move(items);
  return e;
}

const std::string& Elem::name() const {
  if (kind_ != Kind::atom) throw BoundaryError("name() on non-atom " + str());
  return atom_;
}

const Elem& Elem::first() const {
  if (kind_ != Kind::pair) throw BoundaryError("first() on non-pair " + str());
  return parts_[0];
}

const Elem& Elem::second() const {
  if (kind_ != Kind::pair) throw BoundaryError("second() on non-pair " + str());
  return parts_[1];
}

const std::vector<Elem>& Elem::items() const {
  if (kind_ != Kind::list) throw BoundaryError("items() on non-list " + str());
  return parts_;
}

std::strong_ordering Elem::operator<=>(const Elem& other) const {
  if (kind_ != other.kind_) return kind_ <=> other.kind_;
  if (kind_ == Kind::atom) return atom_ <=> other.atom_;
  // parts compare lexicographically, recursing through this operator
  const std::size_t n = std::min(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = parts_[i] <=> other.parts_[i];
    if (c != 0) return c;
  }
  return parts_.size() <=> other.parts_.size();
}

std::string Elem::str() const {
  switch (kind_) {
    case Kind::atom:
      return atom_;
    case Kind::pair:
      return "(" + parts_[0].str() + "," + parts_[1].str() + ")";
    case Kind::list: {
      std::string out = "[";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += parts_[i].str();
      }
      return out + "]";
    }
  }
  return "?";
}

// ---- FinSetObj ----

FinSetObj::FinSetObj(std::vector<Elem> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

FinSetObj FinSetObj::atoms(std::initializer_list<std::string> names) {
  std::vector<Elem> es;
  es.reserve(names.size());
  for (const auto& n : names) es.push_back(Elem::atom(n));
  return FinSetObj(std::move(es));
}

bool FinSetObj::contains(const Elem& e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

std::optional<std::size_t> FinSetObj::find(const Elem& e) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
  if (it == elems_.end() || !(*it == e)) return std::nullopt;
  return static_cast<std::size_t>(it - elems_.begin());
}

std::size_t FinSetObj::index_of(const Elem& e) const {
  auto i = find(e);
  if (!i) throw BoundaryError("element " + e.str() + " not in set " + str());
  return *i;
}

std::string FinSetObj::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ",";
    out += elems_[i].str();
  }
  return out + "}";
}

FinSetObj set_union(const FinSetObj& a, const FinSetObj& b) {
  std::vector<Elem> es = a.elements();
  es.insert(es.end(), b.elements().begin(), b.elements().end());
  return FinSetObj(std::move(es));
}

bool subset_of(const FinSetObj& a, const FinSetObj& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](const Elem& e) { return b.contains(e); });
}

// ---- FinMap ----

FinMap::FinMap(FinSetObj dom, FinSetObj cod, std::vector<Elem> images)
    : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)) {
  if (images_.size() != dom_.size())
    throw BoundaryError("map has " + std::to_string(images_.size()) +
                        " images for a domain of size " +
                        std::to_string(dom_.size()));
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!cod_.contains(images_[i]))
      throw BoundaryError("image " + images_[i].str() + " of " +
                          dom_.elements()[i].str() + " is outside codomain " +
                          cod_.str());
  }
}

FinMap FinMap::from_rule(FinSetObj dom, FinSetObj cod,
                         const std::function<Elem(const Elem&)>& rule) {
  std::vector<Elem> images;
  images.reserve(dom.size());
  for (const Elem& x : dom) images.push_back(rule(x));
  return FinMap(std::move(dom), std::move(cod), std::move(images));
}

FinMap FinMap::from_pairs(FinSetObj dom, FinSetObj cod,
                          const std::vector<std::pair<Elem, Elem>>& graph) {
  std::vector<Elem> images(dom.size());
  std::vector<bool> seen(dom.size(), false);
  for (const auto& [x, fx] : graph) {
    auto i = dom.find(x);
    if (!i) throw BoundaryError("graph key " + x.str() + " not in domain");
    if (seen[*i])
      throw BoundaryError("graph assigns " + x.str() + " twice");
    seen[*i] = true;
    images[*i] = fx;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw BoundaryError("graph missing value at " +
                          dom.elements()[i].str());
  return FinMap(std::move(dom), std::move(cod), std::move(images));
}

FinMap FinMap::identity(FinSetObj x) {
  std::vector<Elem> images = x.elements();
  return FinMap(x, x, std::move(images));
}

FinMap FinMap::constant(FinSetObj dom, FinSetObj cod, const Elem& value) {
  std::vector<Elem> images(dom.size(), value);
  return FinMap(std::move(dom), std::move(cod), std::move(images));
}

const Elem& FinMap::apply(const Elem& x) const {
  auto i = dom_.find(x);
  if (!i)
    throw BoundaryError("element " + x.str() + " not in domain " + dom_.str());
  return images_[*i];
}

bool FinMap::pointwise_equal(const FinMap& other) const {
  return dom_ == other.dom_ && images_ == other.images_;
}

FinMap FinMap::retarget(FinSetObj new_cod) const {
  return FinMap(dom_, std::move(new_cod), images_);
}

std::string FinMap::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    if (i) out += ", ";
    out += dom_.elements()[i].str() + "|->" + images_[i].str();
  }
  return out + "}";
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (!(f.cod() == g.dom()))
    throw BoundaryError("compose: codomain " + f.cod().str() +
                        " does not equal domain " + g.dom().str());
  std::vector<Elem> images;
  images.reserve(f.dom().size());
  for (const Elem& y : f.images()) images.push_back(g.apply(y));
  return FinMap(f.dom(), g.cod(), std::move(images));
}

bool is_surjective(const FinMap& f) {
  return image(f).size() == f.cod().size();
}

bool is_injective(const FinMap& f) {
  std::vector<Elem> im = f.images();
  std::sort(im.begin(), im.end());
  return std::adjacent_find(im.begin(), im.end()) == im.end();
}

bool is_bijective(const FinMap& f) {
  return f.dom().size() == f.cod().size() && is_injective(f) &&
         is_surjective(f);
}

FinMap inverse(const FinMap& f) {
  if (!is_bijective(f))
    throw BoundaryError("inverse of non-bijective map " + f.str());
  std::vector<std::pair<Elem, Elem>> graph;
  graph.reserve(f.dom().size());
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    graph.emplace_back(f.images()[i], f.dom().elements()[i]);
  return FinMap::from_pairs(f.cod(), f.dom(), graph);
}

FinSetObj image(const FinMap& f) { return FinSetObj(f.images()); }

FinSetObj fiber(const FinMap& f, const Elem& value) {
  std::vector<Elem> es;
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    if (f.images()[i] == value) es.push_back(f.dom().elements()[i]);
  return FinSetObj(std::move(es));
}

// ---- pullbacks ----

PullbackSquare chosen_pullback(const FinMap& f, const FinMap& p) {
  if (!(f.cod() == p.cod()))
    throw BoundaryError("pullback of a non-cospan: codomains " +
                        f.cod().str() + " and " + p.cod().str());
  std::vector<Elem> apex_elems;
  for (const Elem& a : p.dom())
    for (const Elem& b : f.dom())
      if (p.apply(a) == f.apply(b)) apex_elems.push_back(Elem::pair(a, b));
  FinSetObj apex(std::move(apex_elems));
  FinMap leg_p = FinMap::from_rule(
      apex, p.dom(), [](const Elem& e) { return e.first(); });
  FinMap leg_f = FinMap::from_rule(
      apex, f.dom(), [](const Elem& e) { return e.second(); });
  return PullbackSquare{std::move(apex), std::move(leg_p), std::move(leg_f), f,
                        p};
}

FinMap pair_into(const PullbackSquare& sq, const FinMap& u, const FinMap& v) {
  if (!(u.dom() == v.dom()))
    throw BoundaryError("pair_into: cone legs have different domains");
  if (!(u.cod() == sq.p.dom()) || !(v.cod() == sq.f.dom()))
    throw BoundaryError("pair_into: cone legs do not target the cospan feet");
  for (const Elem& z : u.dom()) {
    if (!(sq.p.apply(u.apply(z)) == sq.f.apply(v.apply(z))))
      throw CommutationError("cone does not commute at " + z.str() + ": p(" +
                             u.apply(z).str() + ") = " +
                             sq.p.apply(u.apply(z)).str() + " but f(" +
                             v.apply(z).str() + ") = " +
                             sq.f.apply(v.apply(z)).str());
  }
  return FinMap::from_rule(u.dom(), sq.apex, [&](const Elem& z) {
    return Elem::pair(u.apply(z), v.apply(z));
  });
}

FinMap transport_map(const FinMap& p, const FinMap& h, const FinMap& f,
                     const FinMap& g) {
  if (!(h.dom() == f.dom()) || !(h.cod() == g.dom()))
    throw BoundaryError("transport_map: h is not a map dom(f) -> dom(g)");
  for (const Elem& b : f.dom())
    if (!(g.apply(h.apply(b)) == f.apply(b)))
      throw CommutationError("transport_map: h is not a slice morphism at " +
                             b.str());
  PullbackSquare from = chosen_pullback(f, p);
  PullbackSquare to = chosen_pullback(g, p);
  return FinMap::from_rule(from.apex, to.apex, [&](const Elem& e) {
    return Elem::pair(e.first(), h.apply(e.second()));
  });
}

PullbackSquare kernel_pair(const FinMap& f) { return chosen_pullback(f, f); }

Coequalizer coequalizer_of_kernel_pair(const FinMap& f) {
  // least domain element with each image value represents its class
  std::vector<Elem> reps;
  for (const Elem& x : f.dom()) {
    const Elem& v = f.apply(x);
    bool found = false;
    for (const Elem& r : reps)
      if (f.apply(r) == v) {
        found = true;
        break;
      }
    if (!found) reps.push_back(x);  // domain is sorted, so first hit is least
  }
  FinSetObj quotient{reps};
  FinMap proj = FinMap::from_rule(f.dom(), quotient, [&](const Elem& x) {
    for (const Elem& r : reps)
      if (f.apply(r) == f.apply(x)) return r;
    throw Error("unreachable: class representative missing");
  });
  FinMap embed = FinMap::from_rule(
      quotient, f.cod(), [&](const Elem& r) { return f.apply(r); });
  return Coequalizer{std::move(quotient), std::move(proj), std::move(embed)};
}

// ---- enumeration utilities ----

FinSetObj canonical_atoms(const std::string& prefix, std::size_t n) {
  std::vector<Elem> es;
  es.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    es.push_back(Elem::atom(prefix + std::to_string(i)));
  return FinSetObj(std::move(es));
}

std::vector<FinMap> all_maps(const FinSetObj& dom, const FinSetObj& cod) {
  std::vector<FinMap> out;
  if (dom.empty()) {
    out.push_back(FinMap(dom, cod, {}));
    return out;
  }
  if (cod.empty()) return out;
  std::vector<std::size_t> pick(dom.size(), 0);
  for (;;) {
    std::vector<Elem> images;
    images.reserve(dom.size());
    for (std::size_t i : pick) images.push_back(cod.elements()[i]);
    out.push_back(FinMap(dom, cod, std::move(images)));
    // odometer increment, most significant digit first for lex order
    std::size_t k = pick.size();
    while (k > 0) {
      --k;
      if (++pick[k] < cod.size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
  }
}

std::vector<FinMap> all_bijections(const FinSetObj& dom,
                                   const FinSetObj& cod) {
  std::vector<FinMap> out;
  if (dom.size() != cod.size()) return out;
  std::vector<std::size_t> perm(dom.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    std::vector<Elem> images;
    images.reserve(dom.size());
    for (std::size_t i : perm) images.push_back(cod.elements()[i]);
    out.push_back(FinMap(dom, cod, std::move(images)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::optional<FinMap> factor_map(const FinMap& f, const FinMap& q_dom,
                                 const FinMap& q_cod, std::string* witness) {
  if (!(f.dom() == q_dom.dom()) || !(f.cod() == q_cod.dom()))
    throw BoundaryError("factor_map: f must run between the quotient sources");
  std::vector<std::optional<Elem>> chosen(q_dom.cod().size());
  for (const Elem& u : f.dom()) {
    std::size_t cls = q_dom.cod().index_of(q_dom.apply(u));
    Elem value = q_cod.apply(f.apply(u));
    if (!chosen[cls]) {
      chosen[cls] = value;
    } else if (!(*chosen[cls] == value)) {
      if (witness)
        *witness = "class " + q_dom.apply(u).str() + " splits: " +
                   chosen[cls]->str() + " vs " + value.str();
      return std::nullopt;
    }
  }
  std::vector<Elem> images;
  images.reserve(chosen.size());
  for (const auto& c : chosen) {
    if (!c)
      throw BoundaryError("factor_map: quotient map is not surjective");
    images.push_back(*c);
  }
  return FinMap(q_dom.cod(), q_cod.cod(), std::move(images));
}

std::vector<FinMap> all_quotient_maps(const FinSetObj& xs) {
  std::vector<FinMap> out;
  const std::size_t n = xs.size();
  if (n == 0) {
    out.push_back(FinMap(xs, FinSetObj{}, {}));
    return out;
  }
  // restricted growth strings: rgs[0] = 0, rgs[i] <= max(rgs[0..i-1]) + 1
  std::vector<std::size_t> rgs(n, 0);
  for (;;) {
    std::size_t classes = 1 + *std::max_element(rgs.begin(), rgs.end());
    // representative of class c = least element with that class id
    std::vector<Elem> rep(classes);
    std::vector<bool> have(classes, false);
    for (std::size_t i = 0; i < n; ++i)
      if (!have[rgs[i]]) {
        have[rgs[i]] = true;
        rep[rgs[i]] = xs.elements()[i];
      }
    std::vector<Elem> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) images.push_back(rep[rgs[i]]);
    FinSetObj quotient{rep};
    out.push_back(FinMap(xs, std::move(quotient), std::move(images)));
    // next restricted growth string
    std::size_t k = n;
    bool done = true;
    while (k > 1) {
      --k;
      std::size_t cap = 0;
      for (std::size_t j = 0; j < k; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[k] <= cap) {
        ++rgs[k];
        for (std::size_t j = k + 1; j < n; ++j) rgs[j] = 0;
        done = false;
        break;
      }
      rgs[k] = 0;
    }
    if (done) return out;
  }
}

}  // namespace tmcat
