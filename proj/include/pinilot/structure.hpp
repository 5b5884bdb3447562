#pragma once

#include <span>

#include "pinilot/group.hpp"

// Subgroup constructions. Functions taking an `ambient` subgroup compute
// relative to it (normalizer in ambient, normal closure in ambient, ...);
// pass Subgroup::whole(G) for the usual meaning. All scans run over the
// element table, which is the hot loop for orders up to 512.
namespace pinilot {

// Throws NotAnElement if a seed index is outside the group.
Subgroup generated_subgroup(const GroupPtr &g, std::span<const Elem> seed);
Subgroup generated_subgroup(const GroupPtr &g, const std::vector<Perm> &seed);

Subgroup intersection(const Subgroup &a, const Subgroup &b);
Subgroup join(const Subgroup &a, const Subgroup &b);

Subgroup normal_closure(const Subgroup &ambient, const Subgroup &h);
Subgroup normalizer(const Subgroup &ambient, const Subgroup &h);
Subgroup centralizer(const Subgroup &ambient, const Subgroup &h);
Subgroup center(const Subgroup &h);
Subgroup derived_subgroup(const Subgroup &h);
// [a, b] for subgroups a, b of the same group.
Subgroup commutator_subgroup(const Subgroup &a, const Subgroup &b);

// The set HT (not necessarily a subgroup).
ElementSet product_set(const Subgroup &h, const Subgroup &t);
// |HT| = |H||T|/|H n T|, without materializing the set.
std::size_t product_size(const Subgroup &h, const Subgroup &t);
// HT = G for the common parent G.
bool is_supplement(const Subgroup &h, const Subgroup &t);

bool is_normal(const Subgroup &ambient, const Subgroup &h);
Subgroup conjugate_subgroup(const Subgroup &h, Elem g);
std::size_t index(const Subgroup &ambient, const Subgroup &h);

} // namespace pinilot
