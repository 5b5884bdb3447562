#include "pinilot/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "pinilot/structure.hpp"

namespace pinilot {

SubgroupLattice::SubgroupLattice(GroupPtr group, const LatticeOptions &options)
    : group_(std::move(group)) {
  const FiniteGroup &g = *group_;
  const std::size_t n = g.order();

  std::vector<Subgroup> found{Subgroup::trivial(group_)};
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen{
      {found[0].elements(), 0}};

  for (std::size_t head = 0; head < found.size(); ++head) {
    // Copies: found may reallocate while we extend.
    const ElementSet base = found[head].elements();
    const std::vector<Elem> base_gens = found[head].generators();
    const std::vector<Elem> base_members = base.to_vector();
    // <H, x> depends only on the right coset Hx.
    ElementSet covered = base;
    for (std::size_t x = 0; x < n; ++x) {
      const Elem e = static_cast<Elem>(x);
      if (covered.contains(e))
        continue;
      for (Elem h : base_members)
        covered.insert(g.mul(h, e));
      ElementSet ext = close_with(g, base, base_gens, e);
      if (seen.contains(ext))
        continue;
      if (found.size() + 1 > options.budget) {
        throw GroupError(ErrorKind::LatticeBudgetExceeded,
                         "more than " + std::to_string(options.budget) +
                             " subgroups");
      }
      std::vector<Elem> gens = base_gens;
      gens.push_back(e);
      seen.emplace(ext, found.size());
      found.emplace_back(group_, ext, std::move(gens));
    }
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (found[a].order() != found[b].order())
      return found[a].order() < found[b].order();
    return lex_less(found[a].elements(), found[b].elements());
  });
  all_.reserve(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    all_.push_back(std::move(found[perm[i]]));
    index_.emplace(all_.back().elements(), static_cast<SubgroupId>(i));
    by_order_[all_.back().order()].push_back(static_cast<SubgroupId>(i));
  }
  normalizer_.assign(all_.size(), -1);
  subnormal_.assign(all_.size(), -1);
}

std::optional<SubgroupId> SubgroupLattice::find(const ElementSet &elements) const {
  auto it = index_.find(elements);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

SubgroupId SubgroupLattice::id_of(const Subgroup &s) const {
  if (s.parent() != group_)
    throw GroupError(ErrorKind::WrongParent, "subgroup of a different group");
  if (auto id = find(s.elements()))
    return *id;
  throw GroupError(ErrorKind::WrongParent, "element set is not a subgroup");
}

const std::vector<SubgroupId> &SubgroupLattice::with_order(std::size_t order) const {
  static const std::vector<SubgroupId> kEmpty;
  auto it = by_order_.find(order);
  return it == by_order_.end() ? kEmpty : it->second;
}

std::vector<SubgroupId> SubgroupLattice::contained_in(const Subgroup &container) const {
  std::vector<SubgroupId> out;
  for (SubgroupId i = 0; i < all_.size(); ++i) {
    if (all_[i].order() > container.order())
      break;
    if (container.order() % all_[i].order() == 0 &&
        all_[i].elements().is_subset_of(container.elements()))
      out.push_back(i);
  }
  return out;
}

std::vector<SubgroupId> SubgroupLattice::containing(const Subgroup &inner) const {
  std::vector<SubgroupId> out;
  for (SubgroupId i = 0; i < all_.size(); ++i) {
    if (all_[i].order() % inner.order() == 0 &&
        inner.elements().is_subset_of(all_[i].elements()))
      out.push_back(i);
  }
  return out;
}

SubgroupId SubgroupLattice::normalizer_id(SubgroupId id) const {
  if (normalizer_.at(id) < 0) {
    const Subgroup nz = normalizer(whole(), all_[id]);
    normalizer_[id] = static_cast<std::int32_t>(id_of(nz));
  }
  return static_cast<SubgroupId>(normalizer_[id]);
}

bool SubgroupLattice::is_normal(SubgroupId id) const {
  return normalizer_id(id) == whole_id();
}

bool SubgroupLattice::is_subnormal(SubgroupId id) const {
  if (subnormal_.at(id) < 0)
    subnormal_[id] = pinilot::is_subnormal(whole(), all_[id]) ? 1 : 0;
  return subnormal_[id] == 1;
}

const std::vector<SubgroupId> &SubgroupLattice::normal_ids() const {
  if (!normals_) {
    std::vector<SubgroupId> out;
    for (SubgroupId i = 0; i < all_.size(); ++i)
      if (is_normal(i))
        out.push_back(i);
    normals_ = std::move(out);
  }
  return *normals_;
}

std::vector<SubgroupId> SubgroupLattice::normal_ids_of(const Subgroup &ambient) const {
  if (ambient == whole())
    return normal_ids();
  std::vector<SubgroupId> out;
  for (SubgroupId i : contained_in(ambient))
    if (pinilot::is_normal(ambient, all_[i]))
      out.push_back(i);
  return out;
}

namespace {

std::vector<ChiefPair> pairs_from_normals(const SubgroupLattice &lat,
                                          const std::vector<SubgroupId> &normals) {
  std::vector<ChiefPair> out;
  for (std::size_t a = 0; a < normals.size(); ++a) {
    const Subgroup &k = lat.at(normals[a]);
    std::vector<SubgroupId> minimal;
    // normals are in ascending order, so any normal strictly between K and a
    // candidate L has already been seen.
    for (std::size_t b = a + 1; b < normals.size(); ++b) {
      const Subgroup &l = lat.at(normals[b]);
      if (l.order() == k.order() || !k.elements().is_subset_of(l.elements()))
        continue;
      bool is_min = true;
      for (SubgroupId m : minimal) {
        if (lat.at(m).elements().is_subset_of(l.elements())) {
          is_min = false;
          break;
        }
      }
      if (!is_min)
        continue;
      minimal.push_back(normals[b]);
      out.push_back({k, l, normals[a], normals[b], l.order() / k.order()});
    }
  }
  return out;
}

} // namespace

const std::vector<ChiefPair> &SubgroupLattice::chief_pairs() const {
  if (!chief_pairs_)
    chief_pairs_ = pairs_from_normals(*this, normal_ids());
  return *chief_pairs_;
}

std::vector<ChiefPair> SubgroupLattice::chief_pairs_of(const Subgroup &ambient) const {
  if (ambient == whole())
    return chief_pairs();
  return pairs_from_normals(*this, normal_ids_of(ambient));
}

SubgroupLattice all_subgroups(const GroupPtr &g, const LatticeOptions &options) {
  return SubgroupLattice(g, options);
}

std::vector<Subgroup> normal_subgroups(const SubgroupLattice &lattice) {
  std::vector<Subgroup> out;
  for (SubgroupId id : lattice.normal_ids())
    out.push_back(lattice.at(id));
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const SubgroupLattice &lattice) {
  std::vector<Subgroup> out;
  for (const ChiefPair &cp : lattice.chief_pairs())
    if (cp.lower_id == lattice.trivial_id())
      out.push_back(cp.upper);
  return out;
}

std::vector<ChiefPair> chief_pairs(const SubgroupLattice &lattice) {
  return lattice.chief_pairs();
}

namespace {

std::vector<Subgroup> series_from_pairs(const SubgroupLattice &lattice,
                                        const std::vector<ChiefPair> &pairs,
                                        SubgroupId bottom, SubgroupId top) {
  std::vector<Subgroup> series{lattice.at(bottom)};
  SubgroupId current = bottom;
  while (current != top) {
    std::optional<SubgroupId> next;
    for (const ChiefPair &cp : pairs)
      if (cp.lower_id == current && (!next || cp.upper_id < *next))
        next = cp.upper_id;
    if (!next)
      break;
    current = *next;
    series.push_back(lattice.at(current));
  }
  return series;
}

} // namespace

std::vector<Subgroup> chief_series(const SubgroupLattice &lattice) {
  return series_from_pairs(lattice, lattice.chief_pairs(), lattice.trivial_id(),
                           lattice.whole_id());
}

std::vector<Subgroup> chief_series_of(const SubgroupLattice &lattice,
                                      const Subgroup &ambient) {
  return series_from_pairs(lattice, lattice.chief_pairs_of(ambient),
                           lattice.trivial_id(), lattice.id_of(ambient));
}

bool is_subnormal(const Subgroup &ambient, const Subgroup &t) {
  Subgroup current = ambient;
  while (true) {
    Subgroup next = normal_closure(current, t);
    if (next.order() == t.order())
      return true;
    if (next.order() == current.order())
      return false;
    current = std::move(next);
  }
}

std::vector<Subgroup> maximal_subgroups_of(const SubgroupLattice &lattice,
                                           const Subgroup &p) {
  const std::vector<SubgroupId> inside = lattice.contained_in(p);
  std::vector<Subgroup> out;
  // Descending: a proper subgroup is maximal iff no larger proper subgroup
  // already accepted contains it, and all larger ones are accepted or
  // contained in an accepted one.
  std::vector<SubgroupId> maximal;
  for (auto it = inside.rbegin(); it != inside.rend(); ++it) {
    const Subgroup &s = lattice.at(*it);
    if (s.order() == p.order())
      continue;
    bool covered = false;
    for (SubgroupId m : maximal) {
      if (s.elements().is_subset_of(lattice.at(m).elements())) {
        covered = true;
        break;
      }
    }
    if (!covered)
      maximal.push_back(*it);
  }
  std::sort(maximal.begin(), maximal.end());
  for (SubgroupId m : maximal)
    out.push_back(lattice.at(m));
  return out;
}

std::vector<Subgroup> subgroups_of_order(const SubgroupLattice &lattice,
                                         const Subgroup &p, std::size_t k) {
  std::vector<Subgroup> out;
  for (SubgroupId id : lattice.with_order(k))
    if (lattice.at(id).elements().is_subset_of(p.elements()))
      out.push_back(lattice.at(id));
  return out;
}

} // namespace pinilot
