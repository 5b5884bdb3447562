#pragma once

#include "pinilot/group.hpp"

namespace pinilot {

// G/K realized as the permutation group induced by G on the cosets of K.
struct QuotientView {
  GroupPtr base;
  Subgroup kernel;
  GroupPtr quotient;
  std::vector<Elem> project_map; // base element -> quotient element
  std::vector<Elem> lift_map;    // quotient element -> least coset member

  Elem project(Elem g) const { return project_map.at(g); }
  Elem lift(Elem x) const { return lift_map.at(x); }
  // Full preimage of a quotient subgroup.
  Subgroup preimage(const Subgroup &x) const;
};

// Throws NotNormal when k is not normal in its parent.
QuotientView quotient(const Subgroup &k, const BuildOptions &options = {});

// HK/K as a subgroup of q.quotient. Throws WrongParent if h is not in q.base.
Subgroup image_in_quotient(const QuotientView &q, const Subgroup &h);

} // namespace pinilot
