#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pinilot/corpus.hpp"
#include "pinilot/lattice.hpp"
#include "pinilot/structure.hpp"

using namespace pinilot;

namespace {

Perm cyc(std::size_t n, std::initializer_list<std::initializer_list<Point>> c) {
  return Perm::from_cycles(n, c);
}

Subgroup gen(const GroupPtr &g, std::vector<Perm> seed) { return generated_subgroup(g, seed); }

oracle::Bits bits(const Subgroup &s) {
  oracle::Bits b;
  s.elements().for_each([&](Elem e) { b.set(e); });
  return b;
}

} // namespace

TEST_CASE("generated subgroup examples") {
  const GroupPtr s4 = symmetric_group(4);
  CHECK(gen(s4, {}).is_trivial());
  std::vector<Perm> three_cycles;
  for (const Perm &p : s4->elements())
    if (s4->element_order(p) == 3)
      three_cycles.push_back(p);
  CHECK(three_cycles.size() == 8);
  const Subgroup a4 = gen(s4, three_cycles);
  CHECK(a4.order() == 12);
  const oracle::Brute b(s4);
  std::vector<Elem> seed;
  for (const Perm &p : three_cycles)
    seed.push_back(*s4->index_of(p));
  CHECK(bits(a4) == b.closure(seed));

  const GroupPtr a5 = alternating_group(5);
  CHECK(gen(a5, {cyc(5, {{0, 1, 2, 3, 4}})}).order() == 5);
}

TEST_CASE("normal closure, normalizer, centralizer examples") {
  const GroupPtr s4 = symmetric_group(4);
  const Subgroup G = Subgroup::whole(s4);
  const Subgroup t = gen(s4, {cyc(4, {{0, 1}})});
  const Subgroup d = gen(s4, {cyc(4, {{0, 1}, {2, 3}})});
  const Subgroup a4 = derived_subgroup(G);
  CHECK(normal_closure(G, a4) == a4);
  CHECK(normal_closure(G, t).is_whole());
  CHECK(normal_closure(G, d).order() == 4);
  CHECK(normalizer(G, a4).is_whole());
  CHECK(normalizer(G, d).order() == 8);

  const GroupPtr a5 = alternating_group(5);
  const Subgroup c5 = gen(a5, {cyc(5, {{0, 1, 2, 3, 4}})});
  const Subgroup n5 = normalizer(Subgroup::whole(a5), c5);
  CHECK(n5.order() == 10);
  CHECK_FALSE(n5.group().is_abelian());

  const GroupPtr c6 = cyclic_group(6);
  CHECK(centralizer(Subgroup::whole(c6), Subgroup::whole(c6)).is_whole());
  CHECK(center(Subgroup::whole(symmetric_group(3))).is_trivial());
  CHECK(center(Subgroup::whole(dicyclic_group(2))).order() == 2);
}

TEST_CASE("derived subgroup examples") {
  CHECK(derived_subgroup(Subgroup::whole(cyclic_group(12))).is_trivial());
  const Subgroup a4 = derived_subgroup(Subgroup::whole(symmetric_group(4)));
  CHECK(a4.order() == 12);
  CHECK(derived_subgroup(a4).order() == 4);
}

TEST_CASE("supplements and index") {
  const GroupPtr s4 = symmetric_group(4);
  const Subgroup G = Subgroup::whole(s4);
  const Subgroup c4 = gen(s4, {cyc(4, {{0, 1, 2, 3}})});
  const Subgroup s3 = gen(s4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1}})});
  const Subgroup v4p = gen(s4, {cyc(4, {{0, 1}}), cyc(4, {{2, 3}})});
  CHECK(product_size(c4, s3) == 24);
  CHECK(is_supplement(c4, s3));
  CHECK(product_size(v4p, s3) == 12);
  CHECK_FALSE(is_supplement(v4p, s3));
  CHECK(is_supplement(v4p, G));

  const Subgroup a4 = derived_subgroup(G);
  CHECK(is_normal(G, a4));
  CHECK(index(G, a4) == 2);
  const GroupPtr sym3 = symmetric_group(3);
  const Subgroup t = gen(sym3, {cyc(3, {{0, 1}})});
  CHECK_FALSE(is_normal(Subgroup::whole(sym3), t));
  CHECK(index(Subgroup::whole(sym3), t) == 3);
  CHECK(conjugate_subgroup(t, 0) == t);
  CHECK_FALSE(conjugate_subgroup(t, *sym3->index_of(cyc(3, {{0, 1, 2}}))) == t);
}

TEST_CASE("structure properties over the corpus") {
  std::mt19937 rng(99);
  for (const GroupPtr &g : builtin_corpus(100)) {
    CAPTURE(g->name());
    const SubgroupLattice lat(g);
    const Subgroup G = lat.whole();
    const oracle::Brute b(g);
    const auto &subs = lat.all();
    for (const Subgroup &h : subs) {
      CHECK(g->order() % h.order() == 0);
      if (g->order() <= 60) {
        const Subgroup n = normalizer(G, h);
        CHECK(h.is_subgroup_of(n));
        CHECK(centralizer(G, h).is_subgroup_of(n));
        CHECK(bits(n) == b.normalizer(bits(h)));
        CHECK(bits(centralizer(G, h)) == b.centralizer(bits(h)));
      }
      const bool normal = is_normal(G, h);
      CHECK(normal == normalizer(G, h).is_whole());
      bool all_conj = true;
      for (Elem x = 0; x < g->order(); ++x)
        all_conj = all_conj && conjugate_subgroup(h, x) == h;
      CHECK(normal == all_conj);
      const Subgroup nc = normal_closure(G, h);
      CHECK(normal_closure(G, nc) == nc);
    }
    // product formula and monotonicity on sampled pairs
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    const int samples = g->order() <= 32 ? 400 : 100;
    for (int t = 0; t < samples; ++t) {
      const Subgroup &h = subs[pick(rng)], &k = subs[pick(rng)];
      CHECK(product_size(h, k) * intersection(h, k).order() == h.order() * k.order());
      CHECK(product_set(h, k).size() == b.product_size(bits(h), bits(k)));
      if (h.is_subgroup_of(k))
        CHECK(normal_closure(G, h).is_subgroup_of(normal_closure(G, k)));
      const Subgroup j = join(h, k);
      CHECK(h.is_subgroup_of(j));
      CHECK(k.is_subgroup_of(j));
    }
  }
}
