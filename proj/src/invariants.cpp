#include "pinilot/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "pinilot/structure.hpp"

namespace pinilot {

bool PrimeSet::contains(std::size_t p) const {
  return std::binary_search(primes.begin(), primes.end(), p);
}

std::string PrimeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(primes[i]);
  }
  return out + "}";
}

bool is_prime(std::size_t n) {
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

PrimeSet pi_of(std::size_t n) {
  PrimeSet out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.primes.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.primes.push_back(n);
  return out;
}

bool is_pi_number(std::size_t n, const PrimeSet &pi) {
  for (std::size_t p : pi_of(n).primes)
    if (!pi.contains(p))
      return false;
  return true;
}

PrimeSet set_difference(const PrimeSet &a, const PrimeSet &b) {
  PrimeSet out;
  std::set_difference(a.primes.begin(), a.primes.end(), b.primes.begin(),
                      b.primes.end(), std::back_inserter(out.primes));
  return out;
}

std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

std::size_t p_prime_part(std::size_t n, std::size_t p) { return n / p_part(n, p); }

bool is_p_power(std::size_t n, std::size_t p) { return p_part(n, p) == n; }

std::size_t gcd(std::size_t a, std::size_t b) { return std::gcd(a, b); }

std::vector<Subgroup> sylow_subgroups(const SubgroupLattice &lat,
                                      const Subgroup &ambient, std::size_t p) {
  std::vector<Subgroup> out;
  const std::size_t order = p_part(ambient.order(), p);
  for (SubgroupId id : lat.with_order(order))
    if (lat.at(id).elements().is_subset_of(ambient.elements()))
      out.push_back(lat.at(id));
  return out;
}

Subgroup sylow_subgroup(const SubgroupLattice &lat, const Subgroup &ambient,
                        std::size_t p) {
  const std::size_t order = p_part(ambient.order(), p);
  for (SubgroupId id : lat.with_order(order))
    if (lat.at(id).elements().is_subset_of(ambient.elements()))
      return lat.at(id);
  return Subgroup::trivial(ambient.parent());
}

Subgroup sylow_subgroup(const SubgroupLattice &lat, std::size_t p) {
  return sylow_subgroup(lat, lat.whole(), p);
}

namespace {

// Largest normal subgroup of ambient whose order satisfies pred.
template <class Pred>
Subgroup largest_normal(const SubgroupLattice &lat, const Subgroup &ambient,
                        Pred pred) {
  const std::vector<SubgroupId> normals = lat.normal_ids_of(ambient);
  for (auto it = normals.rbegin(); it != normals.rend(); ++it)
    if (pred(lat.at(*it).order()))
      return lat.at(*it);
  return Subgroup::trivial(ambient.parent());
}

} // namespace

Subgroup o_p(const SubgroupLattice &lat, const Subgroup &ambient, std::size_t p) {
  return largest_normal(lat, ambient,
                        [p](std::size_t n) { return is_p_power(n, p); });
}

Subgroup o_p(const SubgroupLattice &lat, std::size_t p) {
  return o_p(lat, lat.whole(), p);
}

Subgroup o_p_prime(const SubgroupLattice &lat, const Subgroup &ambient,
                   std::size_t p) {
  return largest_normal(lat, ambient, [p](std::size_t n) { return n % p != 0; });
}

Subgroup o_p_prime(const SubgroupLattice &lat, std::size_t p) {
  return o_p_prime(lat, lat.whole(), p);
}

Subgroup p_residual(const Subgroup &ambient, std::size_t p) {
  const FiniteGroup &g = ambient.group();
  std::vector<Elem> seed;
  ambient.elements().for_each([&](Elem e) {
    if (g.element_order(e) % p != 0)
      seed.push_back(e);
  });
  return generated_subgroup(ambient.parent(), seed);
}

Subgroup fitting(const SubgroupLattice &lat, const Subgroup &ambient) {
  Subgroup out = Subgroup::trivial(ambient.parent());
  for (std::size_t q : pi_of(ambient.order()).primes)
    out = join(out, o_p(lat, ambient, q));
  return out;
}

Subgroup fitting(const SubgroupLattice &lat) { return fitting(lat, lat.whole()); }

Subgroup frattini(const SubgroupLattice &lat, const Subgroup &ambient) {
  Subgroup out = ambient;
  for (const Subgroup &m : maximal_subgroups_of(lat, ambient))
    out = intersection(out, m);
  return out;
}

Subgroup frattini(const SubgroupLattice &lat) { return frattini(lat, lat.whole()); }

namespace {

bool quotient_by_center_is_simple(const SubgroupLattice &lat, const Subgroup &c) {
  const Subgroup z = center(c);
  if (z.order() == c.order())
    return false;
  for (SubgroupId id : lat.contained_in(c)) {
    const Subgroup &m = lat.at(id);
    if (m.order() == z.order() || m.order() == c.order())
      continue;
    if (z.elements().is_subset_of(m.elements()) && is_normal(c, m))
      return false;
  }
  return true;
}

} // namespace

std::vector<Subgroup> components(const SubgroupLattice &lat,
                                 const Subgroup &ambient) {
  std::vector<Subgroup> out;
  for (SubgroupId id : lat.contained_in(ambient)) {
    const Subgroup &c = lat.at(id);
    // Smallest nontrivial perfect group is A5.
    if (c.order() < 60)
      continue;
    if (derived_subgroup(c).order() != c.order())
      continue;
    if (!quotient_by_center_is_simple(lat, c))
      continue;
    if (!is_subnormal(ambient, c))
      continue;
    out.push_back(c);
  }
  return out;
}

Subgroup generalized_fitting(const SubgroupLattice &lat, const Subgroup &ambient) {
  Subgroup out = fitting(lat, ambient);
  for (const Subgroup &c : components(lat, ambient))
    out = join(out, c);
  return out;
}

Subgroup generalized_fitting(const SubgroupLattice &lat) {
  return generalized_fitting(lat, lat.whole());
}

Subgroup hypercenter(const Subgroup &ambient) {
  const FiniteGroup &g = ambient.group();
  ElementSet z;
  z.insert(FiniteGroup::identity());
  while (true) {
    ElementSet next;
    ambient.elements().for_each([&](Elem x) {
      for (Elem a : ambient.generators())
        if (!z.contains(g.commutator(x, a)))
          return;
      next.insert(x);
    });
    if (next == z)
      break;
    z = next;
  }
  return Subgroup::from_closed_set(ambient.parent(), z);
}

Subgroup u_hypercenter(const SubgroupLattice &lat, const Subgroup &ambient) {
  const std::vector<ChiefPair> pairs = lat.chief_pairs_of(ambient);
  auto qualifies = [&](const Subgroup &n) {
    for (const ChiefPair &cp : pairs)
      if (cp.upper.elements().is_subset_of(n.elements()) &&
          !is_prime(cp.factor_order))
        return false;
    return true;
  };
  Subgroup out = Subgroup::trivial(ambient.parent());
  for (SubgroupId id : lat.normal_ids_of(ambient))
    if (qualifies(lat.at(id)))
      out = join(out, lat.at(id));
  if (!qualifies(out))
    throw GroupError(ErrorKind::JoinPredicateFailure,
                     "join of supersolubly embedded normal subgroups fails");
  return out;
}

Subgroup u_hypercenter(const SubgroupLattice &lat) {
  return u_hypercenter(lat, lat.whole());
}

bool is_p_nilpotent(const Subgroup &ambient, std::size_t p) {
  return p_residual(ambient, p).order() % p != 0;
}

bool is_p_nilpotent_by_lattice(const SubgroupLattice &lat,
                               const Subgroup &ambient, std::size_t p) {
  const std::size_t target = p_prime_part(ambient.order(), p);
  for (SubgroupId id : lat.with_order(target)) {
    const Subgroup &q = lat.at(id);
    if (q.elements().is_subset_of(ambient.elements()) && is_normal(ambient, q))
      return true;
  }
  return false;
}

bool quotient_is_p_nilpotent(const Subgroup &ambient, const Subgroup &n,
                             std::size_t p) {
  const FiniteGroup &g = ambient.group();
  const std::size_t k = p_prime_part(ambient.order(), p);
  std::vector<Elem> seed = n.generators();
  ambient.elements().for_each([&](Elem x) {
    if (n.contains(g.power(x, k)))
      seed.push_back(x);
  });
  const Subgroup m = generated_subgroup(ambient.parent(), seed);
  return (m.order() / n.order()) % p != 0;
}

bool is_soluble(const Subgroup &ambient) {
  Subgroup cur = ambient;
  while (!cur.is_trivial()) {
    Subgroup next = derived_subgroup(cur);
    if (next.order() == cur.order())
      return false;
    cur = std::move(next);
  }
  return true;
}

bool is_nilpotent(const Subgroup &ambient) {
  Subgroup cur = ambient;
  while (!cur.is_trivial()) {
    Subgroup next = commutator_subgroup(cur, ambient);
    if (next.order() == cur.order())
      return false;
    cur = std::move(next);
  }
  return true;
}

namespace {

template <class Pred>
bool all_chief_factors(const SubgroupLattice &lat, const Subgroup &ambient,
                       Pred pred) {
  const std::vector<Subgroup> series = chief_series_of(lat, ambient);
  for (std::size_t i = 1; i < series.size(); ++i)
    if (!pred(series[i].order() / series[i - 1].order()))
      return false;
  return true;
}

} // namespace

bool is_p_soluble(const SubgroupLattice &lat, const Subgroup &ambient,
                  std::size_t p) {
  return all_chief_factors(lat, ambient, [p](std::size_t f) {
    return is_p_power(f, p) || f % p != 0;
  });
}

bool is_supersoluble(const SubgroupLattice &lat, const Subgroup &ambient) {
  return all_chief_factors(lat, ambient, [](std::size_t f) { return is_prime(f); });
}

bool is_p_supersoluble(const SubgroupLattice &lat, const Subgroup &ambient,
                       std::size_t p) {
  return all_chief_factors(lat, ambient,
                           [p](std::size_t f) { return f == p || f % p != 0; });
}

namespace {

// Calls f(h, n) for each section h/n of ambient with |h/n| = order.
template <class F>
bool any_section(const SubgroupLattice &lat, const Subgroup &ambient,
                 std::size_t order, F f) {
  const std::vector<SubgroupId> inside = lat.contained_in(ambient);
  for (SubgroupId hid : inside) {
    const Subgroup &h = lat.at(hid);
    if (h.order() % order != 0)
      continue;
    for (SubgroupId nid : lat.with_order(h.order() / order)) {
      const Subgroup &n = lat.at(nid);
      if (!n.elements().is_subset_of(h.elements()) || !is_normal(h, n))
        continue;
      if (f(h, n))
        return true;
    }
  }
  return false;
}

bool section_is_q8(const Subgroup &h, const Subgroup &n) {
  const FiniteGroup &g = h.group();
  bool abelian = true;
  for (Elem a : h.generators())
    for (Elem b : h.generators())
      if (!n.contains(g.commutator(a, b)))
        abelian = false;
  if (abelian)
    return false;
  std::size_t involutions = 0;
  h.elements().for_each([&](Elem x) {
    if (!n.contains(x) && n.contains(g.mul(x, x)))
      ++involutions;
  });
  return involutions == n.order();
}

bool section_is_a4(const Subgroup &h, const Subgroup &n) {
  const FiniteGroup &g = h.group();
  bool has_order_six = false;
  h.elements().for_each([&](Elem x) {
    const Elem x2 = g.mul(x, x);
    const Elem x3 = g.mul(x2, x);
    if (!n.contains(x2) && !n.contains(x3) && n.contains(g.mul(x3, x3)))
      has_order_six = true;
  });
  return !has_order_six;
}

} // namespace

bool is_quaternion_free(const SubgroupLattice &lat, const Subgroup &ambient) {
  return !any_section(lat, ambient, 8, section_is_q8);
}

bool is_a4_free(const SubgroupLattice &lat, const Subgroup &ambient) {
  return !any_section(lat, ambient, 12, section_is_a4);
}

std::vector<Subgroup> hall_p_prime_subgroups(const SubgroupLattice &lat,
                                             const Subgroup &ambient,
                                             std::size_t p) {
  std::vector<Subgroup> out;
  for (SubgroupId id : lat.with_order(p_prime_part(ambient.order(), p)))
    if (lat.at(id).elements().is_subset_of(ambient.elements()))
      out.push_back(lat.at(id));
  return out;
}

} // namespace pinilot
