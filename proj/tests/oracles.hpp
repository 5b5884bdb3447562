#pragma once

// Brute-force reference implementations. Products come from Perm
// multiplication, never from the library's Cayley table, and subgroups are
// found by closing sets of generators rather than by the lattice code.

#include <algorithm>
#include <bitset>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "pinilot/group.hpp"
#include "pinilot/lattice.hpp"
#include "pinilot/quotient.hpp"

namespace oracle {

using pinilot::Elem;
using pinilot::GroupPtr;
using pinilot::Perm;

using Bits = std::bitset<512>;

inline std::size_t gcd(std::size_t a, std::size_t b) { return b ? gcd(b, a % b) : a; }

inline std::set<std::size_t> primes_of(std::size_t n) {
  std::set<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.insert(p);
      n /= p;
    }
  if (n > 1)
    out.insert(n);
  return out;
}

inline std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

struct Brute {
  GroupPtr g;
  std::size_t n = 0;
  std::vector<std::vector<Elem>> tab;
  std::vector<Elem> inv;

  explicit Brute(GroupPtr group) : g(std::move(group)), n(g->order()) {
    const auto &el = g->elements();
    std::map<Perm, Elem> idx;
    for (std::size_t i = 0; i < n; ++i)
      idx[el[i]] = static_cast<Elem>(i);
    tab.assign(n, std::vector<Elem>(n));
    inv.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        tab[i][j] = idx.at(el[i] * el[j]);
      inv[i] = idx.at(el[i].inverse());
    }
  }

  Elem mul(Elem a, Elem b) const { return tab[a][b]; }
  Elem conj(Elem a, Elem x) const { return mul(mul(inv[x], a), x); }

  Bits closure(const std::vector<Elem> &seed) const {
    Bits s;
    std::vector<Elem> queue{0};
    s.set(0);
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (Elem x : seed) {
        const Elem y = mul(queue[q], x);
        if (!s.test(y)) {
          s.set(y);
          queue.push_back(y);
        }
      }
    return s;
  }

  std::vector<Elem> members(const Bits &b) const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < n; ++i)
      if (b.test(i))
        out.push_back(static_cast<Elem>(i));
    return out;
  }

  Bits all() const {
    Bits b;
    for (std::size_t i = 0; i < n; ++i)
      b.set(i);
    return b;
  }

  std::size_t element_order(Elem e) const {
    std::size_t k = 1;
    for (Elem x = e; x != 0; x = mul(x, e))
      ++k;
    return k;
  }

  // Every subgroup is a join of cyclic subgroups.
  std::vector<Bits> subgroups() const {
    std::vector<std::pair<Bits, Elem>> cyclic;
    std::set<std::string> seen_c;
    for (std::size_t i = 0; i < n; ++i) {
      Bits c = closure({static_cast<Elem>(i)});
      if (seen_c.insert(c.to_string()).second)
        cyclic.emplace_back(c, static_cast<Elem>(i));
    }
    std::map<std::string, std::pair<Bits, std::vector<Elem>>> found;
    std::vector<std::pair<Bits, std::vector<Elem>>> frontier;
    for (auto &[c, gen] : cyclic) {
      found[c.to_string()] = {c, {gen}};
      frontier.push_back({c, {gen}});
    }
    while (!frontier.empty()) {
      std::vector<std::pair<Bits, std::vector<Elem>>> next;
      for (const auto &[s, gens] : frontier)
        for (const auto &[c, gen] : cyclic) {
          if (s.test(gen))
            continue;
          auto g2 = gens;
          g2.push_back(gen);
          Bits j = closure(g2);
          if (found.emplace(j.to_string(), std::make_pair(j, g2)).second)
            next.push_back({j, g2});
        }
      frontier = std::move(next);
    }
    std::vector<Bits> out;
    for (auto &[k, v] : found)
      out.push_back(v.first);
    return out;
  }

  bool is_normal(const Bits &h, const Bits &in) const {
    for (std::size_t x = 0; x < n; ++x) {
      if (!in.test(x))
        continue;
      for (std::size_t a = 0; a < n; ++a)
        if (h.test(a) && !h.test(conj(static_cast<Elem>(a), static_cast<Elem>(x))))
          return false;
    }
    return true;
  }
  bool is_normal(const Bits &h) const { return is_normal(h, all()); }

  Bits normalizer(const Bits &h) const {
    Bits out;
    for (std::size_t x = 0; x < n; ++x) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a)
        if (h.test(a) && !h.test(conj(static_cast<Elem>(a), static_cast<Elem>(x))))
          ok = false;
      if (ok)
        out.set(x);
    }
    return out;
  }

  Bits centralizer(const Bits &h) const {
    Bits out;
    for (std::size_t x = 0; x < n; ++x) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a)
        if (h.test(a) && mul(static_cast<Elem>(a), static_cast<Elem>(x)) !=
                             mul(static_cast<Elem>(x), static_cast<Elem>(a)))
          ok = false;
      if (ok)
        out.set(x);
    }
    return out;
  }

  std::size_t product_size(const Bits &h, const Bits &t) const {
    Bits s;
    for (std::size_t a = 0; a < n; ++a)
      if (h.test(a))
        for (std::size_t b = 0; b < n; ++b)
          if (t.test(b))
            s.set(mul(static_cast<Elem>(a), static_cast<Elem>(b)));
    return s.count();
  }

  std::vector<Bits> normals(const std::vector<Bits> &subs) const {
    std::vector<Bits> out;
    for (const auto &s : subs)
      if (is_normal(s))
        out.push_back(s);
    return out;
  }

  // (K, L) with L/K minimal normal in G/K.
  std::vector<std::pair<Bits, Bits>> chief_pairs(const std::vector<Bits> &normal) const {
    std::vector<std::pair<Bits, Bits>> out;
    auto sub = [](const Bits &a, const Bits &b) { return (a & ~b).none(); };
    for (const auto &k : normal)
      for (const auto &l : normal) {
        if (!sub(k, l) || k == l)
          continue;
        bool minimal = true;
        for (const auto &m : normal)
          if (m != k && m != l && sub(k, m) && sub(m, l))
            minimal = false;
        if (minimal)
          out.emplace_back(k, l);
      }
    return out;
  }

  // Some chain T = S0 < S1 < ... < G with each normal in the next.
  bool is_subnormal(const Bits &t, const std::vector<Bits> &subs) const {
    std::set<std::string> seen{t.to_string()};
    std::vector<Bits> queue{t};
    const Bits whole = all();
    for (std::size_t q = 0; q < queue.size(); ++q) {
      if (queue[q] == whole)
        return true;
      for (const auto &s : subs)
        if ((queue[q] & ~s).none() && s != queue[q] && is_normal(queue[q], s) &&
            seen.insert(s.to_string()).second)
          queue.push_back(s);
    }
    return false;
  }

  bool is_p_nilpotent(const Bits &h, std::size_t p, const std::vector<Bits> &subs) const {
    const std::size_t want = h.count() / p_part(h.count(), p);
    for (const auto &s : subs)
      if (s.count() == want && (s & ~h).none() && is_normal(s, h))
        return true;
    return false;
  }
};

// Definition-level check through actual quotient groups G/K: for every chief
// pair (K, L), |G/K : N_{G/K}(HK/K n L/K)| must be a pi(HK/K n L/K)-number.
struct QuotientPi {
  const Brute &b;
  std::vector<std::pair<Bits, Bits>> pairs;
  std::vector<std::size_t> view_of;
  std::vector<pinilot::QuotientView> views;

  QuotientPi(const Brute &brute, const std::vector<Bits> &subs) : b(brute) {
    pairs = b.chief_pairs(b.normals(subs));
    std::map<std::string, std::size_t> seen;
    for (const auto &[k, l] : pairs) {
      auto [it, fresh] = seen.emplace(k.to_string(), views.size());
      if (fresh) {
        pinilot::ElementSet s;
        for (Elem e : b.members(k))
          s.insert(e);
        views.push_back(pinilot::quotient(pinilot::Subgroup::from_closed_set(b.g, s)));
      }
      view_of.push_back(it->second);
    }
  }

  bool holds(const Bits &h) const {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const Bits &l = pairs[i].second;
      const pinilot::QuotientView &q = views[view_of[i]];
      const GroupPtr &Q = q.quotient;
      const std::size_t qn = Q->order();
      std::vector<bool> in_h(qn, false), in_l(qn, false);
      for (std::size_t x = 0; x < b.n; ++x) {
        if (h.test(x))
          in_h[q.project(static_cast<Elem>(x))] = true;
        if (l.test(x))
          in_l[q.project(static_cast<Elem>(x))] = true;
      }
      std::vector<Elem> xs;
      std::vector<bool> in_x(qn, false);
      for (std::size_t x = 0; x < qn; ++x)
        if (in_h[x] && in_l[x]) {
          xs.push_back(static_cast<Elem>(x));
          in_x[x] = true;
        }
      if (xs.size() == 1)
        continue;
      // Normalizer in G/K from the quotient's own multiplication table.
      std::size_t norm = 0;
      for (std::size_t y = 0; y < qn; ++y) {
        const Elem ye = static_cast<Elem>(y);
        bool ok = true;
        for (Elem x : xs)
          if (!in_x[Q->conj(x, ye)]) {
            ok = false;
            break;
          }
        norm += ok;
      }
      const std::size_t index = qn / norm;
      const auto allowed = primes_of(xs.size());
      for (std::size_t p : primes_of(index))
        if (!allowed.count(p))
          return false;
    }
    return true;
  }
};

inline bool pi_property_by_quotients(const Brute &b, const std::vector<Bits> &subs,
                                     const Bits &h) {
  return QuotientPi(b, subs).holds(h);
}

// Exhaustive Pi-normal / Pi-supplemented search with per-subgroup caches.
struct PiSearch {
  const Brute &b;
  const std::vector<Bits> &subs;
  std::vector<bool> pi_ok, subnormal;

  PiSearch(const Brute &brute, const std::vector<Bits> &all) : b(brute), subs(all) {
    const QuotientPi qp(b, subs);
    for (const auto &s : subs) {
      pi_ok.push_back(qp.holds(s));
      subnormal.push_back(b.is_subnormal(s, subs));
    }
  }

  bool holds(const Bits &h, bool need_subnormal) const {
    for (std::size_t t = 0; t < subs.size(); ++t) {
      const Bits meet = h & subs[t];
      if (h.count() * subs[t].count() / meet.count() != b.n)
        continue;
      if (need_subnormal && !subnormal[t])
        continue;
      for (std::size_t i = 0; i < subs.size(); ++i)
        if (pi_ok[i] && (meet & ~subs[i]).none() && (subs[i] & ~h).none())
          return true;
    }
    return false;
  }
};

// Isomorphism by backtracking over images of the generators.
inline bool isomorphic(const GroupPtr &a, const GroupPtr &bgrp) {
  if (a->order() != bgrp->order())
    return false;
  const Brute A(a), B(bgrp);
  std::vector<std::size_t> oa(A.n), ob(B.n);
  for (std::size_t i = 0; i < A.n; ++i)
    oa[i] = A.element_order(static_cast<Elem>(i));
  for (std::size_t i = 0; i < B.n; ++i)
    ob[i] = B.element_order(static_cast<Elem>(i));
  {
    auto sa = oa, sb = ob;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
      return false;
  }
  const auto &gens = a->generator_indices();
  if (gens.empty())
    return true;
  // Words: each element of A as (predecessor, generator) from BFS.
  std::vector<int> pred(A.n, -1), via(A.n, -1);
  std::vector<Elem> order{0};
  pred[0] = 0;
  for (std::size_t q = 0; q < order.size(); ++q)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem y = A.mul(order[q], gens[k]);
      if (pred[y] < 0) {
        pred[y] = order[q];
        via[y] = static_cast<int>(k);
        order.push_back(y);
      }
    }
  std::vector<Elem> img(gens.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      std::vector<Elem> phi(A.n, 0);
      std::vector<bool> hit(B.n, false);
      for (Elem x : order) {
        if (x == 0)
          continue;
        phi[x] = B.mul(phi[static_cast<std::size_t>(pred[x])], img[static_cast<std::size_t>(via[x])]);
      }
      for (std::size_t x = 0; x < A.n; ++x) {
        if (hit[phi[x]])
          return false;
        hit[phi[x]] = true;
      }
      for (std::size_t x = 0; x < A.n; ++x)
        for (std::size_t j = 0; j < gens.size(); ++j)
          if (phi[A.mul(static_cast<Elem>(x), gens[j])] != B.mul(phi[x], img[j]))
            return false;
      return true;
    }
    for (std::size_t y = 0; y < B.n; ++y) {
      if (ob[y] != oa[gens[k]])
        continue;
      img[k] = static_cast<Elem>(y);
      if (rec(k + 1))
        return true;
    }
    return false;
  };
  return rec(0);
}

inline bool lattice_exceeds(const GroupPtr &g, std::size_t cap) {
  try {
    pinilot::SubgroupLattice lat(g, pinilot::LatticeOptions{cap});
  } catch (const pinilot::GroupError &) {
    return true;
  }
  return false;
}

inline std::vector<std::size_t> order_multiset(const GroupPtr &g) {
  Brute b(g);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < b.n; ++i)
    out.push_back(b.element_order(static_cast<Elem>(i)));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace oracle
