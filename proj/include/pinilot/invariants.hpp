#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pinilot/lattice.hpp"

// Characteristic subgroups and class predicates. Overloads taking an
// `ambient` subgroup treat it as a group in its own right; the lattice must
// be the lattice of the ambient's parent.
namespace pinilot {

struct PrimeSet {
  std::vector<std::size_t> primes; // ascending

  bool contains(std::size_t p) const;
  bool empty() const noexcept { return primes.empty(); }
  std::string to_string() const;
  friend bool operator==(const PrimeSet &, const PrimeSet &) = default;
};

bool is_prime(std::size_t n);
PrimeSet pi_of(std::size_t n);
bool is_pi_number(std::size_t n, const PrimeSet &pi);
PrimeSet set_difference(const PrimeSet &a, const PrimeSet &b);
// Largest power of p dividing n, and n divided by it.
std::size_t p_part(std::size_t n, std::size_t p);
std::size_t p_prime_part(std::size_t n, std::size_t p);
bool is_p_power(std::size_t n, std::size_t p);
std::size_t gcd(std::size_t a, std::size_t b);

// First Sylow p-subgroup in lattice order; trivial when p does not divide
// the order.
Subgroup sylow_subgroup(const SubgroupLattice &lat, const Subgroup &ambient,
                        std::size_t p);
Subgroup sylow_subgroup(const SubgroupLattice &lat, std::size_t p);
std::vector<Subgroup> sylow_subgroups(const SubgroupLattice &lat,
                                      const Subgroup &ambient, std::size_t p);

Subgroup o_p(const SubgroupLattice &lat, const Subgroup &ambient, std::size_t p);
Subgroup o_p(const SubgroupLattice &lat, std::size_t p);
Subgroup o_p_prime(const SubgroupLattice &lat, const Subgroup &ambient,
                   std::size_t p);
Subgroup o_p_prime(const SubgroupLattice &lat, std::size_t p);

// O^p: generated by the elements of order prime to p.
Subgroup p_residual(const Subgroup &ambient, std::size_t p);

Subgroup fitting(const SubgroupLattice &lat, const Subgroup &ambient);
Subgroup fitting(const SubgroupLattice &lat);
Subgroup frattini(const SubgroupLattice &lat, const Subgroup &ambient);
Subgroup frattini(const SubgroupLattice &lat);
// Subnormal quasisimple subgroups of ambient.
std::vector<Subgroup> components(const SubgroupLattice &lat,
                                 const Subgroup &ambient);
Subgroup generalized_fitting(const SubgroupLattice &lat, const Subgroup &ambient);
Subgroup generalized_fitting(const SubgroupLattice &lat);

Subgroup hypercenter(const Subgroup &ambient);
inline Subgroup hypercenter_of(const Subgroup &r) { return hypercenter(r); }
// Throws JoinPredicateFailure if the join of the qualifying normal
// subgroups does not itself qualify.
Subgroup u_hypercenter(const SubgroupLattice &lat, const Subgroup &ambient);
Subgroup u_hypercenter(const SubgroupLattice &lat);

// <elements of order prime to p> is a p'-group.
bool is_p_nilpotent(const Subgroup &ambient, std::size_t p);
// A normal subgroup of order |ambient|_p' exists.
bool is_p_nilpotent_by_lattice(const SubgroupLattice &lat,
                               const Subgroup &ambient, std::size_t p);
// ambient/n is p-nilpotent, decided on the preimage of its p'-elements.
bool quotient_is_p_nilpotent(const Subgroup &ambient, const Subgroup &n,
                             std::size_t p);

bool is_soluble(const Subgroup &ambient);
bool is_nilpotent(const Subgroup &ambient);
bool is_p_soluble(const SubgroupLattice &lat, const Subgroup &ambient,
                  std::size_t p);
bool is_supersoluble(const SubgroupLattice &lat, const Subgroup &ambient);
bool is_p_supersoluble(const SubgroupLattice &lat, const Subgroup &ambient,
                       std::size_t p);

bool is_quaternion_free(const SubgroupLattice &lat, const Subgroup &ambient);
bool is_a4_free(const SubgroupLattice &lat, const Subgroup &ambient);

std::vector<Subgroup> hall_p_prime_subgroups(const SubgroupLattice &lat,
                                             const Subgroup &ambient,
                                             std::size_t p);

} // namespace pinilot
