#include "pinilot/pi_theory.hpp"

#include <unordered_map>

#include "pinilot/structure.hpp"

namespace pinilot {

ElementSet normal_product(const Subgroup &h, const Subgroup &k) {
  require_same_parent(h, k);
  if (h.elements().is_subset_of(k.elements()))
    return k.elements();
  if (k.elements().is_subset_of(h.elements()))
    return h.elements();
  const FiniteGroup &g = h.group();
  const std::vector<Elem> kk = k.members();
  ElementSet out;
  h.elements().for_each([&](Elem x) {
    if (out.contains(x))
      return;
    for (Elem y : kk)
      out.insert(g.mul(x, y));
  });
  return out;
}

namespace {

std::optional<PiPropertyFailure> check_pair(const SubgroupLattice &lat,
                                            const ElementSet &hk,
                                            const ChiefPair &cp) {
  const ElementSet y = hk & cp.upper.elements();
  const std::size_t x_order = y.size() / cp.lower.order();
  // trivial meet, or all of L/K which is normal
  if (x_order == 1 || x_order == cp.factor_order)
    return std::nullopt;
  const auto yid = lat.find(y);
  if (!yid)
    throw GroupError(ErrorKind::WrongParent, "intersection missing from lattice");
  const std::size_t idx =
      lat.group()->order() / lat.at(lat.normalizer_id(*yid)).order();
  const PrimeSet pi = pi_of(x_order);
  if (is_pi_number(idx, pi))
    return std::nullopt;
  return PiPropertyFailure{cp, x_order, idx, set_difference(pi_of(idx), pi)};
}

std::vector<PiPropertyFailure> failures_over(const SubgroupLattice &lat,
                                             const Subgroup &h,
                                             const std::vector<ChiefPair> &pairs,
                                             bool first_only) {
  std::vector<PiPropertyFailure> out;
  // pairs arrive grouped by K
  std::optional<SubgroupId> last;
  ElementSet hk;
  for (const ChiefPair &cp : pairs) {
    if (last != cp.lower_id) {
      hk = normal_product(h, cp.lower);
      last = cp.lower_id;
    }
    if (auto f = check_pair(lat, hk, cp)) {
      out.push_back(std::move(*f));
      if (first_only)
        break;
    }
  }
  return out;
}

} // namespace

PiAnalysis::PiAnalysis(const SubgroupLattice &lattice)
    : lat_(lattice), pi_property_(lattice.size(), -1),
      pi_normal_(lattice.size()), pi_supplemented_(lattice.size()),
      below_(lattice.size()) {}

bool PiAnalysis::has_pi_property(SubgroupId h) {
  if (pi_property_.at(h) < 0)
    pi_property_[h] =
        failures_over(lat_, lat_.at(h), lat_.chief_pairs(), true).empty() ? 1 : 0;
  return pi_property_[h] == 1;
}

std::vector<PiPropertyFailure> PiAnalysis::pi_property_failures(SubgroupId h) const {
  return failures_over(lat_, lat_.at(h), lat_.chief_pairs(), false);
}

const std::vector<SubgroupId> &PiAnalysis::subgroups_of(SubgroupId h) {
  if (!below_.at(h))
    below_[h] = lat_.contained_in(lat_.at(h));
  return *below_[h];
}

std::optional<PiNormalWitness> PiAnalysis::search(SubgroupId hid, bool subnormal) {
  const Subgroup &h = lat_.at(hid);
  const std::size_t n = lat_.group()->order();
  const std::vector<SubgroupId> &inside = subgroups_of(hid);
  // The I-search only depends on H n T.
  std::unordered_map<SubgroupId, std::optional<SubgroupId>> by_meet;
  for (SubgroupId t = lat_.whole_id() + 1; t-- > 0;) {
    const Subgroup &ts = lat_.at(t);
    if (h.order() * ts.order() < n)
      break;
    if (product_size(h, ts) != n)
      continue;
    if (subnormal && !lat_.is_subnormal(t))
      continue;
    const ElementSet meet = h.elements() & ts.elements();
    const SubgroupId mid = *lat_.find(meet);
    auto it = by_meet.find(mid);
    if (it == by_meet.end()) {
      std::optional<SubgroupId> found;
      for (SubgroupId i : inside) {
        if (meet.is_subset_of(lat_.at(i).elements()) && has_pi_property(i)) {
          found = i;
          break;
        }
      }
      it = by_meet.emplace(mid, found).first;
    }
    if (it->second)
      return PiNormalWitness{ts, lat_.at(*it->second), t, *it->second};
  }
  return std::nullopt;
}

const std::optional<PiNormalWitness> &PiAnalysis::pi_normal_witness(SubgroupId h) {
  if (!pi_normal_.at(h))
    pi_normal_[h] = search(h, true);
  return *pi_normal_[h];
}

const std::optional<PiNormalWitness> &PiAnalysis::pi_supplement_witness(SubgroupId h) {
  if (!pi_supplemented_.at(h))
    pi_supplemented_[h] = search(h, false);
  return *pi_supplemented_[h];
}

bool PiAnalysis::is_p_nilpotent(SubgroupId t, std::size_t p) {
  auto &memo = p_nilpotent_[p];
  if (memo.empty())
    memo.assign(lat_.size(), -1);
  if (memo[t] < 0)
    memo[t] = pinilot::is_p_nilpotent(lat_.at(t), p) ? 1 : 0;
  return memo[t] == 1;
}

std::optional<SubgroupId> PiAnalysis::p_nilpotent_supplement(SubgroupId hid,
                                                             std::size_t p) {
  auto &memo = supplement_[p];
  if (memo.empty())
    memo.assign(lat_.size(), -2);
  if (memo[hid] == -2) {
    memo[hid] = -1;
    const Subgroup &h = lat_.at(hid);
    const std::size_t n = lat_.group()->order();
    for (SubgroupId t = lat_.whole_id() + 1; t-- > 0;) {
      const Subgroup &ts = lat_.at(t);
      if (h.order() * ts.order() < n)
        break;
      if (product_size(h, ts) == n && is_p_nilpotent(t, p)) {
        memo[hid] = static_cast<std::int32_t>(t);
        break;
      }
    }
  }
  if (memo[hid] < 0)
    return std::nullopt;
  return static_cast<SubgroupId>(memo[hid]);
}

bool has_pi_property(const SubgroupLattice &lat, const Subgroup &h) {
  return failures_over(lat, h, lat.chief_pairs(), true).empty();
}

std::vector<PiPropertyFailure> pi_property_failures(const SubgroupLattice &lat,
                                                    const Subgroup &h) {
  return failures_over(lat, h, lat.chief_pairs(), false);
}

std::vector<PiPropertyFailure>
pi_property_failures_on_series(const SubgroupLattice &lat, const Subgroup &h) {
  const std::vector<Subgroup> series = chief_series(lat);
  std::vector<ChiefPair> pairs;
  for (std::size_t i = 1; i < series.size(); ++i)
    pairs.push_back({series[i - 1], series[i], lat.id_of(series[i - 1]),
                     lat.id_of(series[i]),
                     series[i].order() / series[i - 1].order()});
  return failures_over(lat, h, pairs, false);
}

bool is_pi_supplemented(const SubgroupLattice &lat, const Subgroup &h) {
  PiAnalysis pa(lat);
  return pa.is_pi_supplemented(lat.id_of(h));
}

PiNormalResult is_pi_normal(const SubgroupLattice &lat, const Subgroup &h) {
  PiAnalysis pa(lat);
  const auto &w = pa.pi_normal_witness(lat.id_of(h));
  return {w.has_value(), w};
}

SupplementResult has_p_nilpotent_supplement(const SubgroupLattice &lat,
                                            const Subgroup &h, std::size_t p) {
  PiAnalysis pa(lat);
  const auto t = pa.p_nilpotent_supplement(lat.id_of(h), p);
  if (!t)
    return {};
  return {true, lat.at(*t)};
}

bool is_valid_pi_normal_witness(const SubgroupLattice &lat, const Subgroup &h,
                                const Subgroup &t, const Subgroup &i) {
  if (!is_subnormal(lat.whole(), t) || !is_supplement(h, t))
    return false;
  const ElementSet meet = h.elements() & t.elements();
  if (!meet.is_subset_of(i.elements()) || !i.elements().is_subset_of(h.elements()))
    return false;
  return has_pi_property(lat, i);
}

} // namespace pinilot
