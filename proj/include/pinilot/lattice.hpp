#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pinilot/group.hpp"

namespace pinilot {

using SubgroupId = std::uint32_t;

inline constexpr std::size_t kDefaultLatticeBudget = 100000;

struct LatticeOptions {
  std::size_t budget = kDefaultLatticeBudget;
};

// (K, L) with K < L both normal in the ambient group and L/K minimal normal
// in the ambient group modulo K.
struct ChiefPair {
  Subgroup lower;
  Subgroup upper;
  SubgroupId lower_id = 0;
  SubgroupId upper_id = 0;
  std::size_t factor_order = 1;
};

// Every subgroup of a group, deduplicated by element set and stored in
// canonical order: ascending order, ties broken by the sorted element lists.
// Id 0 is the trivial subgroup and the last id is the whole group.
//
// Normalizers, normality, subnormality, the normal subgroups and the chief
// pairs are memoized on first use. The memo tables are not synchronized: a
// lattice is confined to one thread while it is being queried.
class SubgroupLattice {
public:
  explicit SubgroupLattice(GroupPtr group, const LatticeOptions &options = {});

  const GroupPtr &group() const noexcept { return group_; }
  std::size_t size() const noexcept { return all_.size(); }
  const Subgroup &at(SubgroupId id) const { return all_.at(id); }
  const std::vector<Subgroup> &all() const noexcept { return all_; }
  SubgroupId trivial_id() const noexcept { return 0; }
  SubgroupId whole_id() const noexcept {
    return static_cast<SubgroupId>(all_.size() - 1);
  }
  const Subgroup &whole() const { return all_.back(); }

  std::optional<SubgroupId> find(const ElementSet &elements) const;
  // Throws WrongParent if s is not a subgroup of this lattice's group.
  SubgroupId id_of(const Subgroup &s) const;

  const std::vector<SubgroupId> &with_order(std::size_t order) const;
  // Ids of subgroups contained in container (ascending).
  std::vector<SubgroupId> contained_in(const Subgroup &container) const;
  std::vector<SubgroupId> containing(const Subgroup &inner) const;

  SubgroupId normalizer_id(SubgroupId id) const;
  bool is_normal(SubgroupId id) const;
  bool is_subnormal(SubgroupId id) const;
  const std::vector<SubgroupId> &normal_ids() const;
  const std::vector<ChiefPair> &chief_pairs() const;

  // Normal subgroups / chief pairs of an arbitrary subgroup viewed as a group.
  std::vector<SubgroupId> normal_ids_of(const Subgroup &ambient) const;
  std::vector<ChiefPair> chief_pairs_of(const Subgroup &ambient) const;

private:
  GroupPtr group_;
  std::vector<Subgroup> all_;
  std::unordered_map<ElementSet, SubgroupId, ElementSetHash> index_;
  std::map<std::size_t, std::vector<SubgroupId>> by_order_;

  mutable std::vector<std::int32_t> normalizer_;
  mutable std::vector<std::int8_t> subnormal_;
  mutable std::optional<std::vector<SubgroupId>> normals_;
  mutable std::optional<std::vector<ChiefPair>> chief_pairs_;
};

// Cyclic-extension enumeration: starting from the trivial subgroup, extend
// every known subgroup by one element per right coset and close, until no new
// subgroup appears. Throws LatticeBudgetExceeded past options.budget.
SubgroupLattice all_subgroups(const GroupPtr &g, const LatticeOptions &options = {});

std::vector<Subgroup> normal_subgroups(const SubgroupLattice &lattice);
std::vector<Subgroup> minimal_normal_subgroups(const SubgroupLattice &lattice);
std::vector<ChiefPair> chief_pairs(const SubgroupLattice &lattice);
// One chief series 1 = G0 < ... < Gk = G, taking the smallest id at each step.
std::vector<Subgroup> chief_series(const SubgroupLattice &lattice);
std::vector<Subgroup> chief_series_of(const SubgroupLattice &lattice,
                                      const Subgroup &ambient);

// Descending chain of normal closures of t, starting from ambient.
bool is_subnormal(const Subgroup &ambient, const Subgroup &t);

std::vector<Subgroup> maximal_subgroups_of(const SubgroupLattice &lattice,
                                           const Subgroup &p);
std::vector<Subgroup> subgroups_of_order(const SubgroupLattice &lattice,
                                         const Subgroup &p, std::size_t k);

} // namespace pinilot
