#pragma once

// Analysis domains: a partial order with bottom and binary least upper
// bounds, an optional top and widening, and a note on why ascending chains
// are finite (or that a widening is required). Plus the product, function
// space and powerset constructions and a sampling law checker.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gcw {

template <typename E>
struct Domain {
  std::function<bool(const E&, const E&)> leq;
  E bottom;
  std::function<E(const E&, const E&)> join;
  std::optional<E> top;
  std::function<E(const E&, const E&)> widen;  // empty when none is known
  // Documentation: why the ascending chain condition holds. Domains with
  // has_acc == false are refused by the plain solvers and need widening_solve.
  bool has_acc = true;
  std::string acc_note;

  bool equal(const E& a, const E& b) const { return leq(a, b) && leq(b, a); }
};

// Subset-ordered powerset: bottom is {} and join is union.
template <typename T, typename Cmp = std::less<T>>
Domain<std::set<T, Cmp>> make_subset_powerset(std::set<T, Cmp> universe) {
  using S = std::set<T, Cmp>;
  Domain<S> d;
  d.leq = [](const S& a, const S& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end(), Cmp());
  };
  d.bottom = S();
  d.join = [](const S& a, const S& b) {
    S out = a;
    out.insert(b.begin(), b.end());
    return out;
  };
  d.top = std::move(universe);
  d.has_acc = true;
  d.acc_note = "finite powerset under subset order";
  return d;
}

// Superset-ordered powerset: bottom is the universe and join is intersection.
template <typename T, typename Cmp = std::less<T>>
Domain<std::set<T, Cmp>> make_superset_powerset(std::set<T, Cmp> universe) {
  using S = std::set<T, Cmp>;
  Domain<S> d;
  d.leq = [](const S& a, const S& b) {
    return std::includes(a.begin(), a.end(), b.begin(), b.end(), Cmp());
  };
  d.bottom = std::move(universe);
  d.join = [](const S& a, const S& b) {
    S out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()), Cmp());
    return out;
  };
  d.top = S();
  d.has_acc = true;
  d.acc_note = "finite powerset under superset order";
  return d;
}

// Componentwise product of two domains.
template <typename E1, typename E2>
Domain<std::pair<E1, E2>> product(Domain<E1> d1, Domain<E2> d2) {
  using P = std::pair<E1, E2>;
  Domain<P> d;
  d.leq = [d1, d2](const P& a, const P& b) {
    return d1.leq(a.first, b.first) && d2.leq(a.second, b.second);
  };
  d.bottom = P(d1.bottom, d2.bottom);
  d.join = [d1, d2](const P& a, const P& b) {
    return P(d1.join(a.first, b.first), d2.join(a.second, b.second));
  };
  if (d1.top && d2.top) d.top = P(*d1.top, *d2.top);
  if (d1.widen && d2.widen) {
    d.widen = [d1, d2](const P& a, const P& b) {
      return P(d1.widen(a.first, b.first), d2.widen(a.second, b.second));
    };
  }
  d.has_acc = d1.has_acc && d2.has_acc;
  d.acc_note = "product; chains bounded by the components' chains";
  return d;
}

// Pointwise lifting over a finite key set (the mapping representation).
template <typename E>
Domain<std::map<std::string, E>> map_domain(const std::set<std::string>& keys, Domain<E> inner) {
  using M = std::map<std::string, E>;
  Domain<M> d;
  M bot;
  for (const std::string& k : keys) bot.emplace(k, inner.bottom);
  d.bottom = std::move(bot);
  d.leq = [inner](const M& a, const M& b) {
    for (const auto& [k, v] : a) {
      auto it = b.find(k);
      if (it == b.end() || !inner.leq(v, it->second)) return false;
    }
    return true;
  };
  d.join = [inner](const M& a, const M& b) {
    M out = a;
    for (const auto& [k, v] : b) {
      auto it = out.find(k);
      if (it == out.end())
        out.emplace(k, v);
      else
        it->second = inner.join(it->second, v);
    }
    return out;
  };
  if (inner.top) {
    M top;
    for (const std::string& k : keys) top.emplace(k, *inner.top);
    d.top = std::move(top);
  }
  if (inner.widen) {
    d.widen = [inner](const M& a, const M& b) {
      M out = a;
      for (const auto& [k, v] : b) {
        auto it = out.find(k);
        if (it == out.end())
          out.emplace(k, v);
        else
          it->second = inner.widen(it->second, v);
      }
      return out;
    };
  }
  d.has_acc = inner.has_acc;
  d.acc_note = "pointwise over a finite key set";
  return d;
}

struct LawReport {
  bool ok = true;
  std::string failure;  // first counterexample, rendered

  explicit operator bool() const { return ok; }
};

// Checks the pointed-semi-lattice laws on all sample pairs/triples:
// reflexivity, antisymmetry, transitivity of leq; idempotence, unit,
// commutativity, associativity of join; and d1 <= d2 iff d1 v d2 = d2.
template <typename E>
LawReport check_domain_laws(const Domain<E>& d, const std::vector<E>& samples,
                            std::function<std::string(const E&)> render = nullptr) {
  LawReport rep;
  auto show = [&](const E& e) { return render ? render(e) : std::string("<elem>"); };
  auto fail = [&](const std::string& what, const E& a) {
    rep.ok = false;
    rep.failure = what + " at " + show(a);
    return rep;
  };
  for (const E& a : samples) {
    if (!d.leq(a, a)) return fail("leq not reflexive", a);
    if (!d.equal(d.join(a, a), a)) return fail("join not idempotent", a);
    if (!d.equal(d.join(a, d.bottom), a)) return fail("bottom not a unit", a);
    if (!d.leq(d.bottom, a)) return fail("bottom not least", a);
  }
  for (const E& a : samples)
    for (const E& b : samples) {
      if (d.leq(a, b) && d.leq(b, a) && !d.equal(a, b)) return fail("leq not antisymmetric", a);
      if (!d.equal(d.join(a, b), d.join(b, a))) return fail("join not commutative", a);
      bool le = d.leq(a, b);
      bool via_join = d.equal(d.join(a, b), b);
      if (le != via_join) return fail("leq and join disagree", a);
    }
  for (const E& a : samples)
    for (const E& b : samples)
      for (const E& c : samples) {
        if (d.leq(a, b) && d.leq(b, c) && !d.leq(a, c)) return fail("leq not transitive", a);
        if (!d.equal(d.join(a, d.join(b, c)), d.join(d.join(a, b), c)))
          return fail("join not associative", a);
        // Least upper bound: a <= c and b <= c iff a v b <= c.
        bool lhs = d.leq(a, c) && d.leq(b, c);
        bool rhs = d.leq(d.join(a, b), c);
        if (lhs != rhs) return fail("join not the least upper bound", a);
      }
  return rep;
}

}  // namespace gcw
