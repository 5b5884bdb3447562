#include "pinilot/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "pinilot/invariants.hpp"
#include "pinilot/structure.hpp"

namespace pinilot {

std::string_view to_string(Status s) {
  switch (s) {
  case Status::Confirmed:
    return "CONFIRMED";
  case Status::HypothesisFails:
    return "HYPOTHESIS_FAILS";
  case Status::NotApplicable:
    return "NOT_APPLICABLE";
  case Status::Counterexample:
    return "COUNTEREXAMPLE";
  case Status::ExpectedCounterexample:
    return "EXPECTED_COUNTEREXAMPLE";
  case Status::Skipped:
    return "SKIPPED";
  }
  return "?";
}

std::string describe(const Subgroup &s) {
  std::string out = "<";
  const auto &gens = s.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i)
      out += ", ";
    out += s.group().element(gens[i]).to_cycle_string(1);
  }
  if (gens.empty())
    out += "()";
  return out + ">";
}

// ---------------------------------------------------------------------------
// GroupAnalysis

GroupAnalysis::GroupAnalysis(GroupPtr g, std::size_t lattice_cap)
    : group_(std::move(g)),
      lattice_(std::make_unique<SubgroupLattice>(group_, LatticeOptions{lattice_cap})),
      pi_(std::make_unique<PiAnalysis>(*lattice_)) {}

bool GroupAnalysis::is_p_nilpotent(std::size_t p) {
  auto it = p_nilpotent_.find(p);
  if (it == p_nilpotent_.end())
    it = p_nilpotent_.emplace(p, pi_->is_p_nilpotent(lattice_->whole_id(), p)).first;
  return it->second;
}

bool GroupAnalysis::is_p_soluble(std::size_t p) {
  auto it = p_soluble_.find(p);
  if (it == p_soluble_.end())
    it = p_soluble_.emplace(p, pinilot::is_p_soluble(*lattice_, whole(), p)).first;
  return it->second;
}

bool GroupAnalysis::quotient_p_nilpotent(SubgroupId n, std::size_t p) {
  const auto key = std::make_pair(n, p);
  auto it = quotient_p_nilpotent_.find(key);
  if (it == quotient_p_nilpotent_.end())
    it = quotient_p_nilpotent_
             .emplace(key, quotient_is_p_nilpotent(whole(), lattice_->at(n), p))
             .first;
  return it->second;
}

std::vector<SubgroupId> GroupAnalysis::normals_with_p_nilpotent_quotient(std::size_t p) {
  std::vector<SubgroupId> out;
  for (SubgroupId n : lattice_->normal_ids())
    if (quotient_p_nilpotent(n, p))
      out.push_back(n);
  return out;
}

Subgroup GroupAnalysis::sylow_of(SubgroupId n, std::size_t p) {
  return sylow_subgroup(*lattice_, lattice_->at(n), p);
}

bool GroupAnalysis::normalizer_p_nilpotent(const Subgroup &p_sub, std::size_t p) {
  return pi_->is_p_nilpotent(lattice_->normalizer_id(lattice_->id_of(p_sub)), p);
}

const Subgroup &GroupAnalysis::u_hypercenter() {
  if (!u_hypercenter_)
    u_hypercenter_ = pinilot::u_hypercenter(*lattice_);
  return *u_hypercenter_;
}

namespace {

bool is_cyclic(const Subgroup &s) {
  bool found = false;
  s.elements().for_each([&](Elem e) {
    if (s.group().element_order(e) == s.order())
      found = true;
  });
  return found;
}

bool is_abelian(const Subgroup &s) {
  const FiniteGroup &g = s.group();
  for (Elem a : s.generators())
    for (Elem b : s.generators())
      if (g.mul(a, b) != g.mul(b, a))
        return false;
  return true;
}

} // namespace

std::optional<SubgroupId>
GroupAnalysis::supplement_or_pi_normal_failure(const Subgroup &container,
                                               std::size_t order, std::size_t p,
                                               bool cyclic_only) {
  for (SubgroupId h : lattice_->with_order(order)) {
    const Subgroup &hs = lattice_->at(h);
    if (!hs.elements().is_subset_of(container.elements()))
      continue;
    if (cyclic_only && !is_cyclic(hs))
      continue;
    if (pi_->p_nilpotent_supplement(h, p))
      continue;
    if (pi_->is_pi_normal(h))
      continue;
    return h;
  }
  return std::nullopt;
}

GroupAnalysis::QuotientWorkspace &GroupAnalysis::quotient_workspace(SubgroupId n) {
  auto it = quotients_.find(n);
  if (it == quotients_.end()) {
    QuotientWorkspace ws;
    BuildOptions opts;
    opts.max_order = kMaxOrderLimit;
    opts.name = group_->name() + "/N" + std::to_string(n);
    ws.view = quotient(lattice_->at(n), opts);
    ws.lattice = std::make_unique<SubgroupLattice>(ws.view.quotient);
    ws.pi = std::make_unique<PiAnalysis>(*ws.lattice);
    it = quotients_.emplace(n, std::move(ws)).first;
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace {

void require_prime(std::size_t p) {
  if (!is_prime(p))
    throw GroupError(ErrorKind::BadPrime, std::to_string(p) + " is not a prime");
}

void require_odd_prime(std::size_t p) {
  if (!is_prime(p) || p == 2)
    throw GroupError(ErrorKind::BadPrime, std::to_string(p) + " is not an odd prime");
}

void require_normal(GroupAnalysis &ga, const Subgroup &n) {
  if (n.parent() != ga.group_ptr())
    throw GroupError(ErrorKind::WrongParent, "subgroup of a different group");
  if (!ga.lattice().is_normal(ga.lattice().id_of(n)))
    throw GroupError(ErrorKind::NotNormal, "N is not normal in G");
}

std::size_t ipow(std::size_t p, int m) {
  std::size_t out = 1;
  for (int i = 0; i < m; ++i)
    out *= p;
  return out;
}

int exponent_of(std::size_t order, std::size_t p) {
  int a = 0;
  while (order > 1) {
    order /= p;
    ++a;
  }
  return a;
}

bool m_in_range(std::size_t sylow_order, std::size_t p, int m) {
  return m >= 1 && ipow(p, m) < sylow_order;
}

VerdictRecord base_record(GroupAnalysis &ga, std::string id, std::optional<std::size_t> p,
                          const std::optional<Subgroup> &n) {
  VerdictRecord r;
  r.check_id = std::move(id);
  r.group = ga.group().name();
  r.group_order = ga.group().order();
  r.p = p;
  if (n) {
    r.n_order = n->order();
    r.n_id = ga.lattice().id_of(*n);
  }
  return r;
}

void finalize(VerdictRecord &r, bool expected_counterexample = false) {
  if (!r.applicable) {
    r.status = Status::NotApplicable;
    r.conclusion_holds.reset();
  } else if (!r.hypothesis_holds) {
    r.status = Status::HypothesisFails;
    r.conclusion_holds.reset();
  } else if (r.conclusion_holds.value_or(false)) {
    r.status = Status::Confirmed;
  } else {
    r.conclusion_holds = false;
    r.status = expected_counterexample ? Status::ExpectedCounterexample
                                       : Status::Counterexample;
  }
}

std::vector<std::size_t> prime_divisors(std::size_t n) { return pi_of(n).primes; }

} // namespace

// ---------------------------------------------------------------------------
// Theorems

VerdictRecord check_theorem_a(GroupAnalysis &ga, std::size_t p, const Subgroup &n,
                              int m, const std::optional<Subgroup> &sylow) {
  require_odd_prime(p);
  require_normal(ga, n);
  VerdictRecord r = base_record(ga, "theorem-a", p, n);
  r.m = m;
  const SubgroupId nid = ga.lattice().id_of(n);
  const Subgroup P = sylow ? *sylow : ga.sylow_of(nid, p);
  const bool q = ga.quotient_p_nilpotent(nid, p);
  const bool nz = ga.normalizer_p_nilpotent(P, p);
  const bool range = m_in_range(P.order(), p, m);
  std::optional<SubgroupId> fail;
  if (range)
    fail = ga.supplement_or_pi_normal_failure(P, ipow(p, m), p);
  r.clauses = {{"quotient_p_nilpotent", q},
               {"normalizer_p_nilpotent", nz},
               {"m_in_range", range},
               {"subgroup_condition", range ? std::optional<bool>(!fail) : std::nullopt}};
  r.applicable = range;
  r.hypothesis_holds = q && nz && range && !fail;
  if (r.applicable && r.hypothesis_holds)
    r.conclusion_holds = ga.is_p_nilpotent(p);
  if (fail)
    r.witness = Witness{"H", ga.lattice().at(*fail)};
  else if (!nz)
    r.witness = Witness{"N_G(P)", ga.lattice().at(ga.lattice().normalizer_id(
                                      ga.lattice().id_of(P)))};
  else if (r.conclusion_holds == false)
    r.witness = Witness{"P", P};
  finalize(r);
  return r;
}

VerdictRecord check_theorem_b(GroupAnalysis &ga, std::size_t p, const Subgroup &n,
                              int m, std::string_view condition,
                              const std::optional<Subgroup> &sylow) {
  require_prime(p);
  if (condition != "i" && condition != "ii" && condition != "iii" && condition != "iv")
    throw GroupError(ErrorKind::BadCondition,
                     "unknown condition '" + std::string(condition) + "'");
  require_normal(ga, n);
  VerdictRecord r = base_record(ga, "theorem-b", p, n);
  r.m = m;
  r.condition = std::string(condition);
  const SubgroupLattice &lat = ga.lattice();
  const SubgroupId nid = lat.id_of(n);
  const Subgroup P = sylow ? *sylow : ga.sylow_of(nid, p);
  const bool coprime = gcd(ga.group().order(), p - 1) == 1;
  const bool q = ga.quotient_p_nilpotent(nid, p);
  const bool range = m_in_range(P.order(), p, m);
  std::optional<SubgroupId> fail;
  if (range)
    fail = ga.supplement_or_pi_normal_failure(P, ipow(p, m), p);

  bool extra = true;
  std::optional<SubgroupId> extra_fail;
  if (condition == "i") {
    extra = m >= 2;
  } else if (condition == "ii") {
    extra = is_abelian(P) || p > 2;
  } else if (condition == "iii") {
    extra_fail = ga.supplement_or_pi_normal_failure(P, 4, p, true);
    extra = !extra_fail;
  } else {
    extra = is_soluble(n) && is_quaternion_free(lat, P);
  }

  r.clauses = {{"gcd_condition", coprime},
               {"quotient_p_nilpotent", q},
               {"m_in_range", range},
               {"subgroup_condition", range ? std::optional<bool>(!fail) : std::nullopt},
               {"condition_" + r.condition, extra}};
  // Condition (i) restricts the exponent range itself.
  r.applicable = range && (condition != "i" || m >= 2);
  r.hypothesis_holds = coprime && q && range && !fail && extra;
  if (r.applicable && r.hypothesis_holds)
    r.conclusion_holds = ga.is_p_nilpotent(p);
  if (fail)
    r.witness = Witness{"H", lat.at(*fail)};
  else if (extra_fail)
    r.witness = Witness{"H", lat.at(*extra_fail)};
  else if (r.conclusion_holds == false)
    r.witness = Witness{"P", P};
  finalize(r);
  return r;
}

VerdictRecord check_remark_psupersoluble(GroupAnalysis &ga, std::size_t p,
                                         const Subgroup &n, int m) {
  require_odd_prime(p);
  require_normal(ga, n);
  VerdictRecord r = base_record(ga, "remark-p-supersoluble", p, n);
  r.m = m;
  const SubgroupId nid = ga.lattice().id_of(n);
  const Subgroup P = ga.sylow_of(nid, p);
  const bool q = ga.quotient_p_nilpotent(nid, p);
  const bool range = m_in_range(P.order(), p, m);
  const bool soluble = ga.is_p_soluble(p);
  std::optional<SubgroupId> fail;
  if (range)
    fail = ga.supplement_or_pi_normal_failure(P, ipow(p, m), p);
  r.clauses = {{"quotient_p_nilpotent", q},
               {"m_in_range", range},
               {"subgroup_condition", range ? std::optional<bool>(!fail) : std::nullopt},
               {"p_soluble", soluble}};
  r.applicable = range && soluble;
  r.hypothesis_holds = q && range && !fail;
  if (r.applicable && r.hypothesis_holds)
    r.conclusion_holds = is_p_supersoluble(ga.lattice(), ga.whole(), p);
  if (fail)
    r.witness = Witness{"H", ga.lattice().at(*fail)};
  if (!soluble)
    r.reason = "G is not p-soluble";
  finalize(r);
  return r;
}

namespace {

template <class Check>
std::vector<VerdictRecord> exponent_sweep(GroupAnalysis &ga, std::size_t p,
                                          int first_m, Check check) {
  std::vector<VerdictRecord> out;
  for (SubgroupId nid : ga.normals_with_p_nilpotent_quotient(p)) {
    const Subgroup &n = ga.lattice().at(nid);
    const int a = exponent_of(p_part(n.order(), p), p);
    if (a - 1 < first_m) {
      VerdictRecord r = check(n, 0);
      r.m.reset();
      r.reason = "no exponent m with 1 < p^m < |P|";
      out.push_back(std::move(r));
      continue;
    }
    for (int m = first_m; m < a; ++m)
      out.push_back(check(n, m));
  }
  return out;
}

} // namespace

std::vector<VerdictRecord> theorem_a_sweep(GroupAnalysis &ga) {
  std::vector<VerdictRecord> out;
  for (std::size_t p : prime_divisors(ga.group().order())) {
    if (p == 2)
      continue;
    auto part = exponent_sweep(ga, p, 1, [&](const Subgroup &n, int m) {
      return check_theorem_a(ga, p, n, m);
    });
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<VerdictRecord> theorem_b_sweep(GroupAnalysis &ga) {
  std::vector<VerdictRecord> out;
  for (std::size_t p : prime_divisors(ga.group().order())) {
    for (std::string_view cond : {"i", "ii", "iii", "iv"}) {
      auto part = exponent_sweep(ga, p, cond == "i" ? 2 : 1,
                                 [&](const Subgroup &n, int m) {
                                   return check_theorem_b(ga, p, n, m, cond);
                                 });
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
  }
  return out;
}

std::vector<VerdictRecord> remark_sweep(GroupAnalysis &ga) {
  std::vector<VerdictRecord> out;
  for (std::size_t p : prime_divisors(ga.group().order())) {
    if (p == 2)
      continue;
    auto part = exponent_sweep(ga, p, 1, [&](const Subgroup &n, int m) {
      return check_remark_psupersoluble(ga, p, n, m);
    });
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corollaries

namespace {

enum class Family { Maximal, TwoMaximal, Minimal, TwoMinimal, MinimalOrFour, OrderTwo };
enum class Coprime { None, PMinusOne, PSquaredMinusOne };

struct CorollarySpec {
  std::string id;
  Family family;
  Coprime coprime;
  bool odd_only;
  bool normalizer;
  bool whole_only;
  bool expected;
};

const std::vector<CorollarySpec> &corollary_specs() {
  static const std::vector<CorollarySpec> specs = {
      {"a-maximal", Family::Maximal, Coprime::None, true, true, false, false},
      {"a-2maximal", Family::TwoMaximal, Coprime::None, true, true, false, false},
      {"a-minimal", Family::Minimal, Coprime::None, true, true, false, false},
      {"a-2minimal", Family::TwoMinimal, Coprime::None, true, true, false, false},
      {"b-maximal", Family::Maximal, Coprime::PMinusOne, false, false, false, false},
      {"b-minimal", Family::MinimalOrFour, Coprime::PMinusOne, false, false, false, false},
      {"b-quaternion-free", Family::OrderTwo, Coprime::None, false, false, false, false},
      {"b-2maximal", Family::TwoMaximal, Coprime::PSquaredMinusOne, false, false, false,
       false},
      {"b-2minimal", Family::TwoMinimal, Coprime::PSquaredMinusOne, false, false, false,
       false},
      {"b-2maximal-weak", Family::TwoMaximal, Coprime::PMinusOne, false, false, true, true},
      {"b-2minimal-weak", Family::TwoMinimal, Coprime::PMinusOne, false, false, true, true},
  };
  return specs;
}

const CorollarySpec *find_corollary(const std::string &id) {
  for (const auto &s : corollary_specs())
    if (s.id == id)
      return &s;
  return nullptr;
}

// Orders of the quantified family, or nullopt when the family is empty.
std::optional<std::vector<std::size_t>> family_orders(Family f, const Subgroup &P,
                                                      std::size_t p) {
  const std::size_t n = P.order();
  switch (f) {
  case Family::Maximal:
    if (n < p)
      return std::nullopt;
    return std::vector<std::size_t>{n / p};
  case Family::TwoMaximal:
    if (n < p * p)
      return std::nullopt;
    return std::vector<std::size_t>{n / (p * p)};
  case Family::Minimal:
    if (n < p)
      return std::nullopt;
    return std::vector<std::size_t>{p};
  case Family::TwoMinimal:
    if (n < p * p)
      return std::nullopt;
    return std::vector<std::size_t>{p * p};
  case Family::MinimalOrFour:
    if (n < p)
      return std::nullopt;
    if (p == 2 && !is_abelian(P))
      return std::vector<std::size_t>{2, 4};
    return std::vector<std::size_t>{p};
  case Family::OrderTwo:
    if (n < 2)
      return std::nullopt;
    return std::vector<std::size_t>{2};
  }
  return std::nullopt;
}

VerdictRecord min_prime_record(GroupAnalysis &ga, const Subgroup &l) {
  const std::size_t p = prime_divisors(ga.group().order()).front();
  VerdictRecord r = base_record(ga, "min-prime-a4-free", p, l);
  const bool a4 = is_a4_free(ga.lattice(), ga.whole());
  const bool q = ga.quotient_p_nilpotent(ga.lattice().id_of(l), p);
  const bool cube = l.order() % (p * p * p) != 0;
  r.clauses = {{"a4_free", a4}, {"quotient_p_nilpotent", q}, {"p3_not_dividing_L", cube}};
  r.applicable = true;
  r.hypothesis_holds = a4 && q && cube;
  if (r.hypothesis_holds)
    r.conclusion_holds = ga.is_p_nilpotent(p);
  finalize(r);
  return r;
}

} // namespace

const std::vector<std::string> &corollary_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto &s : corollary_specs())
      out.push_back(s.id);
    out.push_back("min-prime-a4-free");
    return out;
  }();
  return ids;
}

VerdictRecord check_corollary(GroupAnalysis &ga, const std::string &id, std::size_t p,
                              const Subgroup &n) {
  if (id == "min-prime-a4-free") {
    require_normal(ga, n);
    if (ga.group().order() == 1 || p != prime_divisors(ga.group().order()).front())
      throw GroupError(ErrorKind::BadPrime, "p must be the smallest prime divisor of |G|");
    return min_prime_record(ga, n);
  }
  const CorollarySpec *spec = find_corollary(id);
  if (!spec)
    throw GroupError(ErrorKind::UnknownCorollary, "unknown corollary '" + id + "'");
  if (spec->odd_only)
    require_odd_prime(p);
  else
    require_prime(p);
  if (spec->family == Family::OrderTwo && p != 2)
    throw GroupError(ErrorKind::BadPrime, id + " is stated for p = 2");
  require_normal(ga, n);

  const SubgroupLattice &lat = ga.lattice();
  VerdictRecord r = base_record(ga, id, p, n);
  const SubgroupId nid = lat.id_of(n);
  const Subgroup P = ga.sylow_of(nid, p);
  const std::size_t order = ga.group().order();
  bool hyp = true;
  if (spec->coprime != Coprime::None) {
    const std::size_t d = spec->coprime == Coprime::PMinusOne ? p - 1 : p * p - 1;
    const bool c = gcd(order, d) == 1;
    r.clauses.push_back({"gcd_condition", c});
    hyp = hyp && c;
  }
  const bool q = ga.quotient_p_nilpotent(nid, p);
  r.clauses.push_back({"quotient_p_nilpotent", q});
  hyp = hyp && q;
  if (spec->normalizer) {
    const bool nz = ga.normalizer_p_nilpotent(P, p);
    r.clauses.push_back({"normalizer_p_nilpotent", nz});
    hyp = hyp && nz;
  }
  if (spec->family == Family::OrderTwo) {
    const bool sol = is_soluble(n);
    const bool qf = is_quaternion_free(lat, P);
    r.clauses.push_back({"N_soluble", sol});
    r.clauses.push_back({"P_quaternion_free", qf});
    hyp = hyp && sol && qf;
  }
  const auto orders = family_orders(spec->family, P, p);
  std::optional<SubgroupId> fail;
  if (orders) {
    for (std::size_t k : *orders) {
      fail = ga.supplement_or_pi_normal_failure(P, k, p);
      if (fail)
        break;
    }
    r.clauses.push_back({"family_condition", !fail});
  } else {
    r.clauses.push_back({"family_condition", std::nullopt});
    r.reason = "the quantified family of subgroups of P is empty";
  }
  r.applicable = orders.has_value();
  r.hypothesis_holds = hyp && orders && !fail;
  if (r.applicable && r.hypothesis_holds)
    r.conclusion_holds = ga.is_p_nilpotent(p);
  if (fail)
    r.witness = Witness{"H", lat.at(*fail)};
  else if (r.applicable && r.hypothesis_holds && !*r.conclusion_holds)
    r.witness = Witness{"P", P};
  finalize(r, spec->expected);
  return r;
}

std::vector<VerdictRecord> corollary_sweep(GroupAnalysis &ga, const std::string &id) {
  std::vector<VerdictRecord> out;
  const std::size_t order = ga.group().order();
  if (order == 1)
    return out;
  if (id == "min-prime-a4-free") {
    const std::size_t p = prime_divisors(order).front();
    for (SubgroupId l : ga.normals_with_p_nilpotent_quotient(p))
      out.push_back(min_prime_record(ga, ga.lattice().at(l)));
    return out;
  }
  const CorollarySpec *spec = find_corollary(id);
  if (!spec)
    throw GroupError(ErrorKind::UnknownCorollary, "unknown corollary '" + id + "'");
  for (std::size_t p : prime_divisors(order)) {
    if (spec->odd_only && p == 2)
      continue;
    if (spec->family == Family::OrderTwo && p != 2)
      continue;
    if (spec->whole_only) {
      out.push_back(check_corollary(ga, id, p, ga.whole()));
      continue;
    }
    for (SubgroupId n : ga.normals_with_p_nilpotent_quotient(p))
      out.push_back(check_corollary(ga, id, p, ga.lattice().at(n)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lemmas

namespace {

const std::vector<std::string> kLemmaIds = {
    "pi-property-quotient",   "pi-normal-quotient",
    "normalizer-centralizer", "fstar-u-hypercenter",
    "pi-normal-meet-minimal", "pi-normal-minimal-p-group",
    "maximal-supplement-odd", "maximal-supplement-two",
    "minimal-subgroups-u-hypercenter", "minimal-subgroups-residual",
};

bool is_minimal_normal(const SubgroupLattice &lat, SubgroupId id) {
  for (const ChiefPair &cp : lat.chief_pairs())
    if (cp.lower_id == lat.trivial_id() && cp.upper_id == id)
      return true;
  return false;
}

const Subgroup &require_param(const LemmaParams &params, const std::string &id) {
  if (!params.subgroup)
    throw GroupError(ErrorKind::UnknownLemma, id + " needs a subgroup parameter");
  return *params.subgroup;
}

bool over_bound(GroupAnalysis &ga, const LemmaOptions &options, VerdictRecord &r) {
  if (ga.group().order() <= options.subgroup_quantifier_bound)
    return false;
  r.applicable = false;
  r.reason = "subgroup quantifier limited to |G| <= " +
             std::to_string(options.subgroup_quantifier_bound);
  finalize(r);
  return true;
}

VerdictRecord lemma_pi_property_quotient(GroupAnalysis &ga, const Subgroup &n) {
  VerdictRecord r = base_record(ga, "pi-property-quotient", std::nullopt, n);
  const SubgroupLattice &lat = ga.lattice();
  auto &ws = ga.quotient_workspace(lat.id_of(n));
  std::size_t count = 0;
  std::optional<SubgroupId> bad;
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    if (!ga.pi().has_pi_property(h))
      continue;
    ++count;
    const Subgroup img = image_in_quotient(ws.view, lat.at(h));
    if (!ws.pi->has_pi_property(ws.lattice->id_of(img))) {
      bad = h;
      break;
    }
  }
  r.applicable = true;
  r.hypothesis_holds = count > 0;
  r.conclusion_holds = !bad;
  r.clauses = {{"subgroups_with_pi_property", count > 0}};
  if (bad)
    r.witness = Witness{"H", lat.at(*bad)};
  finalize(r);
  return r;
}

VerdictRecord lemma_pi_normal_quotient(GroupAnalysis &ga, const Subgroup &n) {
  VerdictRecord r = base_record(ga, "pi-normal-quotient", std::nullopt, n);
  const SubgroupLattice &lat = ga.lattice();
  auto &ws = ga.quotient_workspace(lat.id_of(n));
  std::size_t count = 0;
  bool normal_ok = true, supp_ok = true;
  std::optional<SubgroupId> bad;
  for (SubgroupId h = 0; h < lat.size() && !bad; ++h) {
    const Subgroup &hs = lat.at(h);
    if (!n.elements().is_subset_of(hs.elements()) && gcd(hs.order(), n.order()) != 1)
      continue;
    const bool pn = ga.pi().is_pi_normal(h);
    const bool ps = ga.pi().is_pi_supplemented(h);
    if (!pn && !ps)
      continue;
    ++count;
    const SubgroupId img = ws.lattice->id_of(image_in_quotient(ws.view, hs));
    if (pn && !ws.pi->is_pi_normal(img)) {
      normal_ok = false;
      bad = h;
    }
    if (ps && !ws.pi->is_pi_supplemented(img)) {
      supp_ok = false;
      bad = h;
    }
  }
  r.applicable = true;
  r.hypothesis_holds = count > 0;
  r.conclusion_holds = normal_ok && supp_ok;
  r.clauses = {{"qualifying_subgroups", count > 0},
               {"pi_normal_images", normal_ok},
               {"pi_supplemented_images", supp_ok}};
  if (bad)
    r.witness = Witness{"H", lat.at(*bad)};
  finalize(r);
  return r;
}

VerdictRecord lemma_normalizer_centralizer(GroupAnalysis &ga, std::size_t p,
                                           const Subgroup &n) {
  VerdictRecord r = base_record(ga, "normalizer-centralizer", p, n);
  const SubgroupId nid = ga.lattice().id_of(n);
  const Subgroup P = ga.sylow_of(nid, p);
  const bool q = ga.quotient_p_nilpotent(nid, p);
  const bool nc = normalizer(ga.whole(), P) == centralizer(ga.whole(), P);
  r.clauses = {{"quotient_p_nilpotent", q}, {"normalizer_equals_centralizer", nc}};
  r.applicable = true;
  r.hypothesis_holds = q && nc;
  if (r.hypothesis_holds)
    r.conclusion_holds = ga.is_p_nilpotent(p);
  finalize(r);
  return r;
}

VerdictRecord lemma_fstar(GroupAnalysis &ga, const Subgroup &e) {
  VerdictRecord r = base_record(ga, "fstar-u-hypercenter", std::nullopt, e);
  const Subgroup &zu = ga.u_hypercenter();
  const Subgroup fs = generalized_fitting(ga.lattice(), e);
  const bool hyp = fs.elements().is_subset_of(zu.elements());
  r.clauses = {{"fstar_in_u_hypercenter", hyp}};
  r.applicable = true;
  r.hypothesis_holds = hyp;
  if (hyp)
    r.conclusion_holds = e.elements().is_subset_of(zu.elements());
  if (!hyp)
    r.witness = Witness{"F*(E)", fs};
  finalize(r);
  return r;
}

bool is_p_subgroup(const Subgroup &h, std::size_t p) {
  return h.order() > 1 && is_p_power(h.order(), p);
}

VerdictRecord lemma_meet_minimal(GroupAnalysis &ga, std::size_t p, const Subgroup &n,
                                 const LemmaOptions &options) {
  VerdictRecord r = base_record(ga, "pi-normal-meet-minimal", p, n);
  if (over_bound(ga, options, r))
    return r;
  const SubgroupLattice &lat = ga.lattice();
  const std::vector<Subgroup> sylows = sylow_subgroups(lat, ga.whole(), p);
  std::size_t count = 0;
  std::optional<SubgroupId> bad;
  for (SubgroupId h = 0; h < lat.size() && !bad; ++h) {
    const Subgroup &hs = lat.at(h);
    if (!is_p_subgroup(hs, p) || !ga.pi().is_pi_normal(h))
      continue;
    const Subgroup meet = lat.at(*lat.find(hs.elements() & n.elements()));
    bool in_sylow_normal = false;
    for (const Subgroup &s : sylows)
      if (meet.elements().is_subset_of(s.elements()) && is_normal(s, meet)) {
        in_sylow_normal = true;
        break;
      }
    if (!in_sylow_normal)
      continue;
    ++count;
    if (!meet.is_trivial() && meet.order() != n.order())
      bad = h;
  }
  r.clauses = {{"qualifying_subgroups", count > 0}};
  r.applicable = true;
  r.hypothesis_holds = count > 0;
  r.conclusion_holds = !bad;
  if (bad)
    r.witness = Witness{"H", lat.at(*bad)};
  finalize(r);
  return r;
}

VerdictRecord lemma_minimal_p_group(GroupAnalysis &ga, std::size_t p, const Subgroup &l,
                                    const LemmaOptions &options) {
  VerdictRecord r = base_record(ga, "pi-normal-minimal-p-group", p, l);
  if (over_bound(ga, options, r))
    return r;
  const SubgroupLattice &lat = ga.lattice();
  std::optional<SubgroupId> first;
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    const Subgroup &hs = lat.at(h);
    if (!is_p_subgroup(hs, p) || !hs.elements().intersects(l.elements()))
      continue;
    if ((hs.elements() & l.elements()).size() == 1)
      continue;
    if (!ga.pi().is_pi_normal(h))
      continue;
    first = h;
    break;
  }
  r.clauses = {{"qualifying_subgroups", first.has_value()}};
  r.applicable = true;
  r.hypothesis_holds = first.has_value();
  if (first) {
    r.conclusion_holds = is_p_power(l.order(), p);
    if (!*r.conclusion_holds)
      r.witness = Witness{"H", lat.at(*first)};
  }
  finalize(r);
  return r;
}

VerdictRecord lemma_maximal_supplement(GroupAnalysis &ga, std::size_t p, const Subgroup &l,
                                       bool odd) {
  VerdictRecord r = base_record(
      ga, odd ? "maximal-supplement-odd" : "maximal-supplement-two", p, l);
  const SubgroupLattice &lat = ga.lattice();
  const Subgroup P = sylow_subgroup(lat, p);
  const bool qp = is_p_power(ga.group().order() / l.order(), p);
  r.clauses.push_back({"quotient_p_group", qp});
  bool hyp = qp;
  if (odd) {
    const bool nz = ga.normalizer_p_nilpotent(P, p);
    r.clauses.push_back({"normalizer_p_nilpotent", nz});
    hyp = hyp && nz;
  }
  std::optional<SubgroupId> fail;
  if (P.order() > 1) {
    for (SubgroupId m : lat.with_order(P.order() / p)) {
      const Subgroup &ms = lat.at(m);
      if (!ms.elements().is_subset_of(P.elements()))
        continue;
      if ((ms.elements() & l.elements()).size() == 1)
        continue;
      if (ga.pi().p_nilpotent_supplement(m, p))
        continue;
      fail = m;
      break;
    }
  }
  r.clauses.push_back({"maximal_condition", !fail});
  r.applicable = true;
  r.hypothesis_holds = hyp && !fail;
  if (r.hypothesis_holds)
    r.conclusion_holds = ga.is_p_nilpotent(p);
  if (fail)
    r.witness = Witness{"P1", lat.at(*fail)};
  finalize(r);
  return r;
}

VerdictRecord lemma_u_hypercenter(GroupAnalysis &ga, std::size_t p, const Subgroup &P,
                                  const LemmaOptions &options) {
  VerdictRecord r = base_record(ga, "minimal-subgroups-u-hypercenter", p, P);
  if (over_bound(ga, options, r))
    return r;
  std::optional<SubgroupId> fail = ga.supplement_or_pi_normal_failure(P, p, p);
  if (!fail && p == 2 && !is_abelian(P))
    fail = ga.supplement_or_pi_normal_failure(P, 4, p);
  r.clauses = {{"small_subgroup_condition", !fail}};
  r.applicable = true;
  r.hypothesis_holds = !fail;
  if (r.hypothesis_holds)
    r.conclusion_holds = P.elements().is_subset_of(ga.u_hypercenter().elements());
  if (fail)
    r.witness = Witness{"H", ga.lattice().at(*fail)};
  finalize(r);
  return r;
}

VerdictRecord lemma_residual(GroupAnalysis &ga, std::size_t p) {
  VerdictRecord r = base_record(ga, "minimal-subgroups-residual", p, std::nullopt);
  const SubgroupLattice &lat = ga.lattice();
  const Subgroup P = sylow_subgroup(lat, p);
  const bool nz = ga.normalizer_p_nilpotent(P, p);
  const Subgroup op = p_residual(ga.whole(), p);
  const ElementSet meet = P.elements() & op.elements();
  const Subgroup z = hypercenter(ga.whole());
  std::optional<SubgroupId> fail;
  for (SubgroupId h : lat.with_order(p)) {
    const Subgroup &hs = lat.at(h);
    if (!hs.elements().is_subset_of(meet))
      continue;
    if (hs.elements().is_subset_of(z.elements()))
      continue;
    if (ga.pi().p_nilpotent_supplement(h, p))
      continue;
    fail = h;
    break;
  }
  r.clauses = {{"normalizer_p_nilpotent", nz}, {"minimal_condition", !fail}};
  r.applicable = true;
  r.hypothesis_holds = nz && !fail;
  if (r.hypothesis_holds)
    r.conclusion_holds = ga.is_p_nilpotent(p);
  if (fail)
    r.witness = Witness{"H", lat.at(*fail)};
  finalize(r);
  return r;
}

} // namespace

const std::vector<std::string> &lemma_ids() { return kLemmaIds; }

VerdictRecord check_lemma(GroupAnalysis &ga, const std::string &id,
                          const LemmaParams &params, const LemmaOptions &options) {
  auto normal_param = [&]() -> const Subgroup & {
    const Subgroup &s = require_param(params, id);
    require_normal(ga, s);
    return s;
  };
  auto minimal_param = [&]() -> const Subgroup & {
    const Subgroup &s = normal_param();
    if (!is_minimal_normal(ga.lattice(), ga.lattice().id_of(s)))
      throw GroupError(ErrorKind::NotNormal, "subgroup is not minimal normal");
    return s;
  };
  if (id == "pi-property-quotient")
    return lemma_pi_property_quotient(ga, normal_param());
  if (id == "pi-normal-quotient")
    return lemma_pi_normal_quotient(ga, normal_param());
  if (id == "fstar-u-hypercenter")
    return lemma_fstar(ga, normal_param());
  if (id == "maximal-supplement-two") {
    return lemma_maximal_supplement(ga, 2, normal_param(), false);
  }
  if (std::find(kLemmaIds.begin(), kLemmaIds.end(), id) == kLemmaIds.end())
    throw GroupError(ErrorKind::UnknownLemma, "unknown lemma '" + id + "'");
  const std::size_t p = params.p;
  if (id == "maximal-supplement-odd" || id == "minimal-subgroups-residual")
    require_odd_prime(p);
  else
    require_prime(p);
  if (id == "normalizer-centralizer")
    return lemma_normalizer_centralizer(ga, p, normal_param());
  if (id == "pi-normal-meet-minimal")
    return lemma_meet_minimal(ga, p, minimal_param(), options);
  if (id == "pi-normal-minimal-p-group")
    return lemma_minimal_p_group(ga, p, minimal_param(), options);
  if (id == "maximal-supplement-odd")
    return lemma_maximal_supplement(ga, p, normal_param(), true);
  if (id == "minimal-subgroups-u-hypercenter") {
    const Subgroup &s = normal_param();
    if (!is_p_subgroup(s, p))
      throw GroupError(ErrorKind::BadPrime, "P is not a nontrivial p-subgroup");
    return lemma_u_hypercenter(ga, p, s, options);
  }
  return lemma_residual(ga, p);
}

std::vector<VerdictRecord> lemma_sweep(GroupAnalysis &ga, const std::string &id,
                                       const LemmaOptions &options) {
  if (std::find(kLemmaIds.begin(), kLemmaIds.end(), id) == kLemmaIds.end())
    throw GroupError(ErrorKind::UnknownLemma, "unknown lemma '" + id + "'");
  std::vector<VerdictRecord> out;
  const SubgroupLattice &lat = ga.lattice();
  const std::size_t order = ga.group().order();
  const std::vector<std::size_t> primes = prime_divisors(order);
  auto run = [&](std::size_t p, std::optional<Subgroup> s) {
    out.push_back(check_lemma(ga, id, LemmaParams{p, std::move(s)}, options));
  };
  if (id == "pi-property-quotient" || id == "pi-normal-quotient" ||
      id == "fstar-u-hypercenter") {
    for (SubgroupId n : lat.normal_ids())
      run(0, lat.at(n));
  } else if (id == "normalizer-centralizer") {
    for (std::size_t p : primes)
      for (SubgroupId n : ga.normals_with_p_nilpotent_quotient(p))
        run(p, lat.at(n));
  } else if (id == "pi-normal-meet-minimal" || id == "pi-normal-minimal-p-group") {
    for (std::size_t p : primes)
      for (const Subgroup &n : minimal_normal_subgroups(lat))
        run(p, n);
  } else if (id == "maximal-supplement-odd" || id == "maximal-supplement-two") {
    const bool odd = id == "maximal-supplement-odd";
    for (std::size_t p : primes) {
      if (odd == (p == 2))
        continue;
      for (SubgroupId l : lat.normal_ids())
        if (is_p_power(order / lat.at(l).order(), p))
          run(p, lat.at(l));
    }
  } else if (id == "minimal-subgroups-u-hypercenter") {
    for (std::size_t p : primes)
      for (SubgroupId n : lat.normal_ids())
        if (is_p_subgroup(lat.at(n), p))
          run(p, lat.at(n));
  } else {
    for (std::size_t p : primes)
      if (p != 2)
        run(p, std::nullopt);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus

std::string suite_names(unsigned suites) {
  static const std::pair<unsigned, const char *> kNames[] = {
      {kSuiteTheoremA, "A"},
      {kSuiteTheoremB, "B"},
      {kSuiteRemark, "remark1"},
      {kSuiteLemmas, "lemmas"},
      {kSuiteCorollaries, "corollaries"}};
  std::string out;
  for (const auto &[bit, name] : kNames) {
    if (suites & bit) {
      if (!out.empty())
        out += ",";
      out += name;
    }
  }
  return out;
}

std::size_t CorpusReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(
      verdicts.begin(), verdicts.end(), [s](const VerdictRecord &r) { return r.status == s; }));
}

std::vector<const VerdictRecord *> CorpusReport::with_status(Status s) const {
  std::vector<const VerdictRecord *> out;
  for (const auto &r : verdicts)
    if (r.status == s)
      out.push_back(&r);
  return out;
}

namespace {

struct GroupResult {
  GroupSummary summary;
  std::vector<VerdictRecord> records;
  std::map<std::string, double> timings;
  // Subgroups whose Pi-property differs between all chief pairs and the
  // factors of one chief series; nullopt when not compared.
  std::optional<std::size_t> series_reading_differences;
};

VerdictRecord skipped_record(const FiniteGroup &g, const std::string &check,
                             const std::string &reason) {
  VerdictRecord r;
  r.check_id = check;
  r.group = g.name();
  r.group_order = g.order();
  r.status = Status::Skipped;
  r.reason = reason;
  return r;
}

std::vector<std::string> suite_check_ids(unsigned suites) {
  std::vector<std::string> out;
  if (suites & kSuiteTheoremA)
    out.push_back("theorem-a");
  if (suites & kSuiteTheoremB)
    out.push_back("theorem-b");
  if (suites & kSuiteRemark)
    out.push_back("remark-p-supersoluble");
  if (suites & kSuiteLemmas)
    for (const auto &id : lemma_ids())
      out.push_back(id);
  if (suites & kSuiteCorollaries)
    for (const auto &id : corollary_ids())
      out.push_back(id);
  return out;
}

GroupResult process_group(const GroupPtr &g, const HarnessConfig &config) {
  using clock = std::chrono::steady_clock;
  GroupResult res;
  res.summary = {g->name(), g->order(), g->degree(), std::nullopt, ""};
  auto timed = [&](const std::string &phase, auto &&fn) {
    const auto t0 = clock::now();
    fn();
    res.timings[phase] += std::chrono::duration<double>(clock::now() - t0).count();
  };

  std::unique_ptr<GroupAnalysis> ga;
  try {
    timed("lattice", [&] { ga = std::make_unique<GroupAnalysis>(g, config.lattice_cap); });
    res.summary.lattice_size = ga->lattice().size();
  } catch (const GroupError &e) {
    res.summary.skip_reason = e.what();
    for (const auto &id : suite_check_ids(config.suites))
      res.records.push_back(skipped_record(*g, id, e.what()));
    return res;
  }

  auto guarded = [&](const std::string &check, auto &&fn) {
    try {
      fn();
    } catch (const GroupError &e) {
      res.records.push_back(skipped_record(*g, check, e.what()));
    }
  };
  auto append = [&](std::vector<VerdictRecord> v) {
    std::move(v.begin(), v.end(), std::back_inserter(res.records));
  };

  if (config.suites & kSuiteTheoremA)
    timed("theorem-a", [&] { guarded("theorem-a", [&] { append(theorem_a_sweep(*ga)); }); });
  if (config.suites & kSuiteTheoremB)
    timed("theorem-b", [&] { guarded("theorem-b", [&] { append(theorem_b_sweep(*ga)); }); });
  if (config.suites & kSuiteRemark)
    timed("remark1", [&] {
      guarded("remark-p-supersoluble", [&] { append(remark_sweep(*ga)); });
    });
  if (config.suites & kSuiteLemmas) {
    timed("lemmas", [&] {
      for (const auto &id : lemma_ids())
        guarded(id, [&] { append(lemma_sweep(*ga, id, config.lemmas)); });
      if (g->order() <= config.lemmas.subgroup_quantifier_bound) {
        std::size_t diff = 0;
        const SubgroupLattice &lat = ga->lattice();
        for (SubgroupId h = 0; h < lat.size(); ++h)
          if (ga->pi().has_pi_property(h) !=
              pi_property_failures_on_series(lat, lat.at(h)).empty())
            ++diff;
        res.series_reading_differences = diff;
      }
    });
  }
  if (config.suites & kSuiteCorollaries)
    timed("corollaries", [&] {
      for (const auto &id : corollary_ids())
        guarded(id, [&] { append(corollary_sweep(*ga, id)); });
    });
  return res;
}

} // namespace

CorpusReport run_corpus(const std::vector<GroupPtr> &corpus, const HarnessConfig &config) {
  CorpusReport report;
  report.config = config;

  std::vector<GroupPtr> groups = corpus;
  std::stable_sort(groups.begin(), groups.end(), [](const GroupPtr &a, const GroupPtr &b) {
    if (a->order() != b->order())
      return a->order() < b->order();
    return a->name() < b->name();
  });

  std::vector<GroupResult> results(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < groups.size();)
      results[i] = process_group(groups[i], config);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, 64));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }

  std::size_t series_groups = 0;
  std::vector<std::string> series_diffs;
  for (auto &res : results) {
    report.groups.push_back(res.summary);
    std::move(res.records.begin(), res.records.end(), std::back_inserter(report.verdicts));
    for (const auto &[phase, secs] : res.timings)
      report.timings[phase] += secs;
    if (res.series_reading_differences) {
      ++series_groups;
      if (*res.series_reading_differences > 0)
        series_diffs.push_back(res.summary.name + " (" +
                               std::to_string(*res.series_reading_differences) +
                               " subgroups)");
    }
  }

  if (config.suites & kSuiteTheoremB) {
    // Condition (iii) adds nothing for odd p; compare it with (ii).
    std::map<std::tuple<std::string, std::size_t, std::optional<SubgroupId>,
                        std::optional<int>>,
             std::pair<std::optional<Status>, std::optional<Status>>>
        cmp;
    for (const auto &r : report.verdicts) {
      if (r.check_id != "theorem-b" || !r.p || *r.p == 2)
        continue;
      auto &slot = cmp[{r.group, *r.p, r.n_id, r.m}];
      if (r.condition == "ii")
        slot.first = r.status;
      else if (r.condition == "iii")
        slot.second = r.status;
    }
    std::size_t differ = 0;
    for (const auto &[key, v] : cmp)
      if (v.first != v.second)
        ++differ;
    report.notes.push_back(
        "theorem-b condition iii at odd p: " + std::to_string(cmp.size()) +
        " instances compared with condition ii, " + std::to_string(differ) + " differ");
  }
  if (config.suites & kSuiteLemmas) {
    if (series_diffs.empty()) {
      report.notes.push_back(
          "pi-property: all-chief-pairs and single-chief-series readings agree on every "
          "subgroup of the " +
          std::to_string(series_groups) + " groups compared");
    } else {
      std::string s = "pi-property: all-chief-pairs and single-chief-series readings "
                      "differ on ";
      for (std::size_t i = 0; i < series_diffs.size(); ++i)
        s += (i ? ", " : "") + series_diffs[i];
      report.notes.push_back(s);
    }
  }
  if (config.suites & kSuiteCorollaries) {
    report.notes.push_back(
        "b-quaternion-free: the quotient hypothesis is read as 2-nilpotent");
    report.notes.push_back("b-2maximal-weak, b-2minimal-weak: (|G|, p-1) = 1 in place of "
                           "(|G|, p^2-1) = 1, N = G; counterexamples are expected");
  }
  if (report.count(Status::Skipped) > 0)
    report.notes.push_back("groups over the lattice cap are reported as SKIPPED");
  return report;
}

} // namespace pinilot
