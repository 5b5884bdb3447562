#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pinilot/element_set.hpp"
#include "pinilot/errors.hpp"
#include "pinilot/perm.hpp"

namespace pinilot {

inline constexpr std::size_t kDefaultMaxOrder = 300;

struct BuildOptions {
  std::size_t max_order = kDefaultMaxOrder;
  std::string name;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite permutation group with its full element table.
//
// Elements are stored in lexicographic order of their image sequences, so
// index 0 is always the identity. Products, inverses and element orders are
// precomputed tables; after construction the object is immutable.
class FiniteGroup {
public:
  const std::string &name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }

  const std::vector<Perm> &generators() const noexcept { return generators_; }
  const std::vector<Elem> &generator_indices() const noexcept {
    return generator_indices_;
  }
  const std::vector<Perm> &elements() const noexcept { return elements_; }
  const Perm &element(Elem e) const { return elements_.at(e); }

  std::optional<Elem> index_of(const Perm &p) const;
  // Throws NotAnElement.
  Elem require_index(const Perm &p) const;

  static constexpr Elem identity() noexcept { return 0; }
  Elem mul(Elem a, Elem b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order() + b];
  }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  // b^-1 a b
  Elem conj(Elem a, Elem b) const noexcept { return mul(mul(inverse_[b], a), b); }
  Elem commutator(Elem a, Elem b) const noexcept {
    return mul(mul(inverse_[a], inverse_[b]), mul(a, b));
  }
  Elem power(Elem a, std::size_t k) const noexcept;

  std::size_t element_order(Elem e) const { return orders_.at(e); }
  // Throws NotAnElement when p is not in the group.
  std::size_t element_order(const Perm &p) const {
    return element_order(require_index(p));
  }

  ElementSet all_elements() const { return ElementSet::first_n(order()); }
  bool is_abelian() const;

private:
  friend GroupPtr build_group(std::size_t, const std::vector<Perm> &,
                              const BuildOptions &);
  FiniteGroup() = default;

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Elem> generator_indices_;
  std::vector<Perm> elements_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> orders_;
};

// Enumerates <generators> by closure. Throws MalformedPermutation for a
// generator of the wrong degree and ClosureExceedsBound past max_order.
GroupPtr build_group(std::size_t degree, const std::vector<Perm> &generators,
                     const BuildOptions &options = {});

// A subgroup of a parent group: an element bitset plus generators, both in
// parent element indices. Equality is element-set equality.
class Subgroup {
public:
  Subgroup() = default;

  // Trusts that (elements, generators) describe a subgroup of parent with
  // <generators> = elements.
  Subgroup(GroupPtr parent, ElementSet elements, std::vector<Elem> generators);

  static Subgroup whole(const GroupPtr &g);
  static Subgroup trivial(const GroupPtr &g);

  // Greedy generating set for a set already known to be closed.
  static Subgroup from_closed_set(const GroupPtr &g, const ElementSet &elements);

  const GroupPtr &parent() const noexcept { return parent_; }
  const FiniteGroup &group() const noexcept { return *parent_; }
  const ElementSet &elements() const noexcept { return elements_; }
  const std::vector<Elem> &generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(Elem e) const { return elements_.contains(e); }
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_whole() const noexcept { return order_ == parent_->order(); }
  std::vector<Elem> members() const { return elements_.to_vector(); }

  bool is_subgroup_of(const Subgroup &other) const;

  friend bool operator==(const Subgroup &a, const Subgroup &b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

private:
  GroupPtr parent_;
  ElementSet elements_;
  std::vector<Elem> generators_;
  std::size_t order_ = 0;
};

// Throws WrongParent unless both subgroups live in the same group.
void require_same_parent(const Subgroup &a, const Subgroup &b);

// Smallest subgroup containing base and extra, computed by adjoining right
// cosets of base. base_set must be a subgroup.
ElementSet close_with(const FiniteGroup &g, const ElementSet &base_set,
                      std::span<const Elem> base_generators, Elem extra);

struct DirectProduct {
  GroupPtr group;
  Subgroup first;
  Subgroup second;
};

DirectProduct direct_product(const GroupPtr &a, const GroupPtr &b,
                             const BuildOptions &options = {});

// action[i][n] is the image n^h_i of element n of N under the i-th generator
// h_i of H (right action, n^h = h^-1 n h in the product).
using ElementMap = std::vector<Elem>;

struct SemidirectProduct {
  GroupPtr group;
  Subgroup normal;
  Subgroup complement;
};

// N x| H realized by its regular action on the |H||N| pairs (h, n) with
// (h1, n1)(h2, n2) = (h1 h2, n1^h2 n2). Throws NotAnAutomorphism when an
// image map is not a bijective endomorphism and NotAHomomorphism when the
// generator images do not extend to a homomorphism H -> Aut(N).
SemidirectProduct semidirect_product(const GroupPtr &n, const GroupPtr &h,
                                     const std::vector<ElementMap> &action,
                                     const BuildOptions &options = {});

} // namespace pinilot
