#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pinilot/corpus.hpp"
#include "pinilot/quotient.hpp"
#include "pinilot/structure.hpp"

using namespace pinilot;

namespace {

Perm cyc(std::size_t n, std::initializer_list<std::initializer_list<Point>> c) {
  return Perm::from_cycles(n, c);
}

bool has_kind(ErrorKind kind, auto &&fn) {
  try {
    fn();
  } catch (const GroupError &e) {
    return e.kind() == kind;
  }
  return false;
}

} // namespace

TEST_CASE("perm basics") {
  const Perm a = cyc(4, {{0, 1, 2}});
  const Perm b = cyc(4, {{0, 1}});
  // a first, then b
  CHECK((a * b)[0] == b[a[0]]);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.to_cycle_string(1) == "(1 2 3)");
  CHECK(Perm::identity(3).to_cycle_string() == "()");
  CHECK(has_kind(ErrorKind::MalformedPermutation, [] { Perm(std::vector<Point>{0, 0, 1}); }));
}

TEST_CASE("build_group examples") {
  CHECK(build_group(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})})->order() == 6);
  CHECK(build_group(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})})->order() == 60);
  CHECK(build_group(1, {})->order() == 1);
  CHECK(has_kind(ErrorKind::ClosureExceedsBound, [] {
    build_group(6, {cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{0, 1}})}, BuildOptions{100, "S6"});
  }));
  CHECK(has_kind(ErrorKind::MalformedPermutation,
                 [] { build_group(3, {Perm::identity(4)}); }));
}

TEST_CASE("element order") {
  const GroupPtr s4 = symmetric_group(4);
  CHECK(s4->element_order(Perm::identity(4)) == 1);
  CHECK(s4->element_order(cyc(4, {{0, 1, 2, 3}})) == 4);
  CHECK(s4->element_order(cyc(4, {{0, 1}, {2, 3}})) == 2);
  const GroupPtr a4 = alternating_group(4);
  CHECK(has_kind(ErrorKind::NotAnElement, [&] { a4->element_order(cyc(4, {{0, 1}})); }));
}

TEST_CASE("element table is canonical and closed") {
  std::mt19937 rng(7);
  for (const GroupPtr &g : builtin_corpus(120)) {
    CAPTURE(g->name());
    const auto &el = g->elements();
    CHECK(el[0].is_identity());
    CHECK(std::is_sorted(el.begin(), el.end()));
    std::uniform_int_distribution<std::size_t> pick(0, g->order() - 1);
    for (int t = 0; t < 50; ++t) {
      const auto x = static_cast<Elem>(pick(rng)), y = static_cast<Elem>(pick(rng));
      const auto idx = g->index_of(el[x] * el[y]);
      REQUIRE(idx.has_value());
      CHECK(*idx == g->mul(x, y));
      CHECK(g->mul(x, g->inv(x)) == 0);
    }
    for (Elem gen : g->generator_indices())
      CHECK(gen < g->order());
  }
}

TEST_CASE("direct product") {
  const auto dp = direct_product(alternating_group(5), cyclic_group(5));
  CHECK(dp.group->order() == 300);
  CHECK(dp.first.order() == 60);
  CHECK(dp.second.order() == 5);
  CHECK(is_normal(Subgroup::whole(dp.group), dp.second));

  const GroupPtr v = direct_product(cyclic_group(2), cyclic_group(2)).group;
  CHECK(v->order() == 4);
  for (Elem e = 1; e < 4; ++e)
    CHECK(v->element_order(e) == 2);

  const GroupPtr d8 = dihedral_group(4);
  const GroupPtr d8t = direct_product(d8, cyclic_group(1)).group;
  CHECK(oracle::order_multiset(d8) == oracle::order_multiset(d8t));
  CHECK(oracle::isomorphic(d8, d8t));
  CHECK(has_kind(ErrorKind::ClosureExceedsBound, [] {
    direct_product(alternating_group(5), cyclic_group(5), BuildOptions{200, {}});
  }));
}

TEST_CASE("semidirect products") {
  const GroupPtr g75 = order75_group();
  CHECK(g75->order() == 75);
  CHECK_FALSE(g75->is_abelian());

  // trivial action is the direct product
  const GroupPtr c3 = cyclic_group(3), c4 = cyclic_group(4);
  ElementMap id(c3->order());
  for (Elem e = 0; e < c3->order(); ++e)
    id[e] = e;
  const auto sd = semidirect_product(c3, c4, {id});
  const GroupPtr dp = direct_product(c3, c4).group;
  CHECK(sd.group->order() == 12);
  CHECK(oracle::order_multiset(sd.group) == oracle::order_multiset(dp));
  CHECK(oracle::isomorphic(sd.group, dp));
  CHECK(is_normal(Subgroup::whole(sd.group), sd.normal));

  // inversion gives S3
  ElementMap invmap(c3->order());
  for (Elem e = 0; e < c3->order(); ++e)
    invmap[e] = c3->inv(e);
  const auto s3 = semidirect_product(c3, cyclic_group(2), {invmap});
  CHECK(s3.group->order() == 6);
  CHECK_FALSE(s3.group->is_abelian());
  CHECK(oracle::order_multiset(s3.group) == oracle::order_multiset(symmetric_group(3)));
  CHECK(oracle::isomorphic(s3.group, symmetric_group(3)));

  // a constant map is not an automorphism
  ElementMap bad(c3->order(), 0);
  CHECK(has_kind(ErrorKind::NotAnAutomorphism,
                 [&] { semidirect_product(c3, cyclic_group(2), {bad}); }));
  // inversion has order 2, so C3 cannot act through it
  CHECK(has_kind(ErrorKind::NotAHomomorphism,
                 [&] { semidirect_product(c3, cyclic_group(3), {invmap}); }));
}

TEST_CASE("named constructors against isomorphism oracle") {
  CHECK(oracle::isomorphic(dicyclic_group(2), matrix_semidirect(1, 0, dicyclic_group(2), {{}, {}})));
  CHECK(sl2_3()->order() == 24);
  CHECK(gl2_3()->order() == 48);
  CHECK(psl2_7()->order() == 168);
  CHECK(oracle::isomorphic(dihedral_group(3), symmetric_group(3)));
  CHECK(oracle::isomorphic(matrix_semidirect(3, 1, cyclic_group(4), {{{2}}}), dicyclic_group(3)));
  CHECK_FALSE(oracle::isomorphic(dicyclic_group(2), dihedral_group(4)));
  CHECK(oracle::isomorphic(
      matrix_semidirect(2, 2, cyclic_group(3), {{{0, 1}, {1, 1}}}), alternating_group(4)));
  CHECK_FALSE(oracle::isomorphic(sl2_3(), symmetric_group(4)));
  // Q8 has a unique involution
  const GroupPtr q8 = dicyclic_group(2);
  int inv = 0;
  for (Elem e = 1; e < 8; ++e)
    inv += q8->element_order(e) == 2;
  CHECK(inv == 1);
}

TEST_CASE("quotient examples") {
  const GroupPtr s4 = symmetric_group(4);
  const Subgroup v4 = generated_subgroup(s4, std::vector<Perm>{cyc(4, {{0, 1}, {2, 3}}),
                                                                cyc(4, {{0, 2}, {1, 3}})});
  const QuotientView q = quotient(v4);
  CHECK(q.quotient->order() == 6);
  CHECK_FALSE(q.quotient->is_abelian());
  CHECK(oracle::isomorphic(q.quotient, symmetric_group(3)));

  const QuotientView qt = quotient(Subgroup::trivial(s4));
  CHECK(oracle::isomorphic(qt.quotient, s4));
  CHECK(quotient(Subgroup::whole(s4)).quotient->order() == 1);

  const Subgroup t = generated_subgroup(s4, std::vector<Perm>{cyc(4, {{0, 1}})});
  CHECK(image_in_quotient(q, t).order() == 2);
  CHECK(image_in_quotient(q, v4).order() == 1);
  CHECK(image_in_quotient(q, Subgroup::whole(s4)).is_whole());
  CHECK(has_kind(ErrorKind::NotNormal, [&] { quotient(t); }));
  CHECK(has_kind(ErrorKind::WrongParent,
                 [&] { image_in_quotient(q, Subgroup::whole(symmetric_group(3))); }));
  CHECK(q.preimage(image_in_quotient(q, t)).order() == 8);
}

TEST_CASE("quotient round trip is an epimorphism with the right kernel") {
  for (const GroupPtr &g : builtin_corpus(100)) {
    if (g->order() > 60)
      continue;
    CAPTURE(g->name());
    const oracle::Brute b(g);
    for (const auto &nb : b.normals(b.subgroups())) {
      ElementSet s;
      for (Elem e : b.members(nb))
        s.insert(e);
      const QuotientView q = quotient(Subgroup::from_closed_set(g, s));
      REQUIRE(q.quotient->order() * nb.count() == g->order());
      std::vector<bool> hit(q.quotient->order(), false);
      for (Elem x = 0; x < g->order(); ++x) {
        hit[q.project(x)] = true;
        CHECK((q.project(x) == 0) == nb.test(x));
        for (Elem y = 0; y < g->order(); ++y)
          if (q.project(b.mul(x, y)) != q.quotient->mul(q.project(x), q.project(y))) {
            FAIL("project is not multiplicative");
          }
      }
      for (Elem z = 0; z < q.quotient->order(); ++z) {
        CHECK(hit[z]);
        CHECK(q.project(q.lift(z)) == z);
      }
    }
  }
}
