#include "pinilot/structure.hpp"

#include <algorithm>

namespace pinilot {

namespace {

void require_within(const Subgroup &ambient, const Subgroup &h) {
  require_same_parent(ambient, h);
  if (!h.elements().is_subset_of(ambient.elements()))
    throw GroupError(ErrorKind::WrongParent,
                     "subgroup is not contained in the ambient subgroup");
}

// Extends (set, gens) by x in place.
void adjoin(const FiniteGroup &g, ElementSet &set, std::vector<Elem> &gens,
            Elem x) {
  if (set.contains(x))
    return;
  set = close_with(g, set, gens, x);
  gens.push_back(x);
}

} // namespace

Subgroup generated_subgroup(const GroupPtr &g, std::span<const Elem> seed) {
  ElementSet set;
  set.insert(FiniteGroup::identity());
  std::vector<Elem> gens;
  for (Elem e : seed) {
    if (e >= g->order())
      throw GroupError(ErrorKind::NotAnElement,
                       "element index " + std::to_string(e) + " out of range");
    adjoin(*g, set, gens, e);
  }
  return Subgroup(g, set, std::move(gens));
}

Subgroup generated_subgroup(const GroupPtr &g, const std::vector<Perm> &seed) {
  std::vector<Elem> idx;
  idx.reserve(seed.size());
  for (const Perm &p : seed)
    idx.push_back(g->require_index(p));
  return generated_subgroup(g, idx);
}

Subgroup intersection(const Subgroup &a, const Subgroup &b) {
  require_same_parent(a, b);
  if (a.elements().is_subset_of(b.elements()))
    return a;
  if (b.elements().is_subset_of(a.elements()))
    return b;
  return Subgroup::from_closed_set(a.parent(), a.elements() & b.elements());
}

Subgroup join(const Subgroup &a, const Subgroup &b) {
  require_same_parent(a, b);
  ElementSet set = a.elements();
  std::vector<Elem> gens = a.generators();
  for (Elem x : b.generators())
    adjoin(a.group(), set, gens, x);
  return Subgroup(a.parent(), set, std::move(gens));
}

Subgroup normal_closure(const Subgroup &ambient, const Subgroup &h) {
  require_within(ambient, h);
  const FiniteGroup &g = ambient.group();
  ElementSet set = h.elements();
  std::vector<Elem> gens = h.generators();
  // Every generator gets conjugated by every ambient generator; new
  // conjugates are appended and processed in turn.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elem a : ambient.generators()) {
      const Elem c = g.conj(gens[i], a);
      adjoin(g, set, gens, c);
    }
  }
  return Subgroup(ambient.parent(), set, std::move(gens));
}

Subgroup normalizer(const Subgroup &ambient, const Subgroup &h) {
  require_within(ambient, h);
  const FiniteGroup &g = ambient.group();
  ElementSet result;
  ambient.elements().for_each([&](Elem x) {
    for (Elem s : h.generators())
      if (!h.contains(g.conj(s, x)))
        return;
    result.insert(x);
  });
  return Subgroup::from_closed_set(ambient.parent(), result);
}

Subgroup centralizer(const Subgroup &ambient, const Subgroup &h) {
  require_within(ambient, h);
  const FiniteGroup &g = ambient.group();
  ElementSet result;
  ambient.elements().for_each([&](Elem x) {
    for (Elem s : h.generators())
      if (g.mul(x, s) != g.mul(s, x))
        return;
    result.insert(x);
  });
  return Subgroup::from_closed_set(ambient.parent(), result);
}

Subgroup center(const Subgroup &h) { return centralizer(h, h); }

Subgroup commutator_subgroup(const Subgroup &a, const Subgroup &b) {
  require_same_parent(a, b);
  const FiniteGroup &g = a.group();
  // [A, B] is the normal closure in <A, B> of the generator commutators.
  std::vector<Elem> seeds;
  for (Elem x : a.generators())
    for (Elem y : b.generators())
      seeds.push_back(g.commutator(x, y));
  Subgroup seed = generated_subgroup(a.parent(), seeds);
  return normal_closure(join(a, b), seed);
}

Subgroup derived_subgroup(const Subgroup &h) { return commutator_subgroup(h, h); }

ElementSet product_set(const Subgroup &h, const Subgroup &t) {
  require_same_parent(h, t);
  const FiniteGroup &g = h.group();
  const std::vector<Elem> tm = t.members();
  ElementSet out;
  h.elements().for_each([&](Elem x) {
    for (Elem y : tm)
      out.insert(g.mul(x, y));
  });
  return out;
}

std::size_t product_size(const Subgroup &h, const Subgroup &t) {
  require_same_parent(h, t);
  return h.order() * t.order() / h.elements().intersection_size(t.elements());
}

bool is_supplement(const Subgroup &h, const Subgroup &t) {
  return product_size(h, t) == h.group().order();
}

bool is_normal(const Subgroup &ambient, const Subgroup &h) {
  require_within(ambient, h);
  const FiniteGroup &g = ambient.group();
  for (Elem a : ambient.generators())
    for (Elem s : h.generators())
      if (!h.contains(g.conj(s, a)))
        return false;
  return true;
}

Subgroup conjugate_subgroup(const Subgroup &h, Elem x) {
  const FiniteGroup &g = h.group();
  if (x >= g.order())
    throw GroupError(ErrorKind::NotAnElement, "conjugating element out of range");
  ElementSet set;
  h.elements().for_each([&](Elem e) { set.insert(g.conj(e, x)); });
  std::vector<Elem> gens;
  gens.reserve(h.generators().size());
  for (Elem s : h.generators())
    gens.push_back(g.conj(s, x));
  return Subgroup(h.parent(), set, std::move(gens));
}

std::size_t index(const Subgroup &ambient, const Subgroup &h) {
  require_within(ambient, h);
  return ambient.order() / h.order();
}

} // namespace pinilot
