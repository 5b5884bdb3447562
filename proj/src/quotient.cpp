#include "pinilot/quotient.hpp"

#include "pinilot/structure.hpp"

namespace pinilot {

QuotientView quotient(const Subgroup &k, const BuildOptions &options) {
  const GroupPtr &base = k.parent();
  const FiniteGroup &g = *base;
  if (!is_normal(Subgroup::whole(base), k))
    throw GroupError(ErrorKind::NotNormal, "quotient by a non-normal subgroup");

  // Cosets numbered by their least element.
  const std::size_t n = g.order();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(n, kUnassigned);
  std::vector<Elem> reps;
  const std::vector<Elem> km = k.members();
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] != kUnassigned)
      continue;
    for (Elem y : km)
      coset[g.mul(y, static_cast<Elem>(x))] = reps.size();
    reps.push_back(static_cast<Elem>(x));
  }
  const std::size_t cosets = reps.size();

  auto action_of = [&](Elem x) {
    std::vector<Point> img(cosets);
    for (std::size_t c = 0; c < cosets; ++c)
      img[c] = static_cast<Point>(coset[g.mul(reps[c], x)]);
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  for (Elem s : g.generator_indices())
    gens.push_back(action_of(s));
  BuildOptions opts = options;
  if (opts.name.empty())
    opts.name = g.name() + "/K";
  GroupPtr q = build_group(cosets, gens, opts);

  QuotientView view{base, k, q, std::vector<Elem>(n), std::vector<Elem>(cosets)};
  // Coset c's image is the action of its representative.
  std::vector<Elem> coset_image(cosets);
  for (std::size_t c = 0; c < cosets; ++c)
    coset_image[c] = q->require_index(action_of(reps[c]));
  for (std::size_t x = 0; x < n; ++x)
    view.project_map[x] = coset_image[coset[x]];
  for (std::size_t c = 0; c < cosets; ++c)
    view.lift_map[coset_image[c]] = reps[c];
  return view;
}

Subgroup QuotientView::preimage(const Subgroup &x) const {
  if (x.parent() != quotient)
    throw GroupError(ErrorKind::WrongParent, "subgroup is not in the quotient");
  ElementSet set;
  for (std::size_t g = 0; g < project_map.size(); ++g)
    if (x.contains(project_map[g]))
      set.insert(static_cast<Elem>(g));
  return Subgroup::from_closed_set(base, set);
}

Subgroup image_in_quotient(const QuotientView &q, const Subgroup &h) {
  if (h.parent() != q.base)
    throw GroupError(ErrorKind::WrongParent, "subgroup is not in the base group");
  ElementSet set;
  h.elements().for_each([&](Elem e) { set.insert(q.project(e)); });
  std::vector<Elem> gens;
  for (Elem s : h.generators()) {
    const Elem img = q.project(s);
    if (img != FiniteGroup::identity())
      gens.push_back(img);
  }
  return Subgroup(q.quotient, set, std::move(gens));
}

} // namespace pinilot
