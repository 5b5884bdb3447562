#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pinilot/invariants.hpp"
#include "pinilot/lattice.hpp"

namespace pinilot {

struct PiPropertyFailure {
  ChiefPair pair;
  std::size_t intersection_order = 1;
  std::size_t normalizer_index = 1;
  PrimeSet offending_primes;
};

struct PiNormalWitness {
  Subgroup t;
  Subgroup i;
  SubgroupId t_id = 0;
  SubgroupId i_id = 0;
};

struct PiNormalResult {
  bool holds = false;
  std::optional<PiNormalWitness> witness;
};

struct SupplementResult {
  bool holds = false;
  std::optional<Subgroup> supplement;
};

// Memoized predicates over one lattice. Not thread-safe.
//
// For a chief pair (K, L) the set (HK/K) n (L/K) is Y/K with Y = HK n L,
// and its normalizer in G/K is N_G(Y)/K, so the index in the definition is
// |G : N_G(Y)|. No quotient group is built.
class PiAnalysis {
public:
  explicit PiAnalysis(const SubgroupLattice &lattice);

  const SubgroupLattice &lattice() const noexcept { return lat_; }

  bool has_pi_property(SubgroupId h);
  std::vector<PiPropertyFailure> pi_property_failures(SubgroupId h) const;

  // Witness with T subnormal (Pi-normal) or arbitrary (Pi-supplemented).
  const std::optional<PiNormalWitness> &pi_normal_witness(SubgroupId h);
  const std::optional<PiNormalWitness> &pi_supplement_witness(SubgroupId h);
  bool is_pi_normal(SubgroupId h) { return pi_normal_witness(h).has_value(); }
  bool is_pi_supplemented(SubgroupId h) {
    return pi_supplement_witness(h).has_value();
  }

  std::optional<SubgroupId> p_nilpotent_supplement(SubgroupId h, std::size_t p);
  bool is_p_nilpotent(SubgroupId t, std::size_t p);

  // Subgroups of h, ascending.
  const std::vector<SubgroupId> &subgroups_of(SubgroupId h);

private:
  std::optional<PiNormalWitness> search(SubgroupId h, bool subnormal);

  const SubgroupLattice &lat_;
  std::vector<std::int8_t> pi_property_;
  std::vector<std::optional<std::optional<PiNormalWitness>>> pi_normal_;
  std::vector<std::optional<std::optional<PiNormalWitness>>> pi_supplemented_;
  std::map<std::size_t, std::vector<std::int32_t>> supplement_;
  std::map<std::size_t, std::vector<std::int8_t>> p_nilpotent_;
  std::vector<std::optional<std::vector<SubgroupId>>> below_;
};

// HK for K normal in the common parent.
ElementSet normal_product(const Subgroup &h, const Subgroup &k);

bool has_pi_property(const SubgroupLattice &lat, const Subgroup &h);
std::vector<PiPropertyFailure> pi_property_failures(const SubgroupLattice &lat,
                                                    const Subgroup &h);
// The same test restricted to the factors of chief_series(lat).
std::vector<PiPropertyFailure>
pi_property_failures_on_series(const SubgroupLattice &lat, const Subgroup &h);

bool is_pi_supplemented(const SubgroupLattice &lat, const Subgroup &h);
PiNormalResult is_pi_normal(const SubgroupLattice &lat, const Subgroup &h);
SupplementResult has_p_nilpotent_supplement(const SubgroupLattice &lat,
                                            const Subgroup &h, std::size_t p);

// Checks every field of a claimed witness for h.
bool is_valid_pi_normal_witness(const SubgroupLattice &lat, const Subgroup &h,
                                const Subgroup &t, const Subgroup &i);

} // namespace pinilot
