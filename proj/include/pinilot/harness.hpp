#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pinilot/lattice.hpp"
#include "pinilot/pi_theory.hpp"
#include "pinilot/quotient.hpp"

namespace pinilot {

inline constexpr const char *kEngineVersion = "0.3.0";

enum class Status {
  Confirmed,
  HypothesisFails,
  NotApplicable,
  Counterexample,
  ExpectedCounterexample,
  Skipped,
};

std::string_view to_string(Status s);

// A named hypothesis ingredient. An empty value means it was not evaluated.
struct Clause {
  std::string name;
  std::optional<bool> value;
};

struct Witness {
  std::string role;
  Subgroup subgroup;
};

struct VerdictRecord {
  std::string check_id;
  std::string group;
  std::size_t group_order = 0;
  std::optional<std::size_t> p;
  std::optional<std::size_t> n_order;
  std::optional<SubgroupId> n_id;
  std::optional<int> m;
  std::string condition;
  bool applicable = false;
  bool hypothesis_holds = false;
  std::optional<bool> conclusion_holds;
  Status status = Status::NotApplicable;
  std::vector<Clause> clauses;
  std::optional<Witness> witness;
  std::string reason;
};

// Memoized per-group state shared by all checks on one group.
class GroupAnalysis {
public:
  // Throws LatticeBudgetExceeded when the group has more than lattice_cap
  // subgroups.
  explicit GroupAnalysis(GroupPtr g, std::size_t lattice_cap = kDefaultLatticeBudget);

  const GroupPtr &group_ptr() const noexcept { return group_; }
  const FiniteGroup &group() const noexcept { return *group_; }
  const SubgroupLattice &lattice() const noexcept { return *lattice_; }
  PiAnalysis &pi() noexcept { return *pi_; }
  const Subgroup &whole() const { return lattice_->whole(); }

  bool is_p_nilpotent(std::size_t p);
  bool quotient_p_nilpotent(SubgroupId n, std::size_t p);
  std::vector<SubgroupId> normals_with_p_nilpotent_quotient(std::size_t p);
  Subgroup sylow_of(SubgroupId n, std::size_t p);
  bool normalizer_p_nilpotent(const Subgroup &p_sub, std::size_t p);
  const Subgroup &u_hypercenter();
  bool is_p_soluble(std::size_t p);

  // First subgroup of container with the given order that has neither a
  // p-nilpotent supplement nor is Pi-normal.
  std::optional<SubgroupId> supplement_or_pi_normal_failure(const Subgroup &container,
                                                            std::size_t order,
                                                            std::size_t p,
                                                            bool cyclic_only = false);

  struct QuotientWorkspace {
    QuotientView view;
    std::unique_ptr<SubgroupLattice> lattice;
    std::unique_ptr<PiAnalysis> pi;
  };
  QuotientWorkspace &quotient_workspace(SubgroupId n);

private:
  GroupPtr group_;
  std::unique_ptr<SubgroupLattice> lattice_;
  std::unique_ptr<PiAnalysis> pi_;
  std::map<std::size_t, bool> p_nilpotent_;
  std::map<std::size_t, bool> p_soluble_;
  std::map<std::pair<SubgroupId, std::size_t>, bool> quotient_p_nilpotent_;
  std::optional<Subgroup> u_hypercenter_;
  std::map<SubgroupId, QuotientWorkspace> quotients_;
};

// Each check validates its parameters (BadPrime, NotNormal, BadCondition)
// and returns one record. `sylow` overrides the Sylow subgroup of N.
VerdictRecord check_theorem_a(GroupAnalysis &ga, std::size_t p, const Subgroup &n,
                              int m, const std::optional<Subgroup> &sylow = {});
VerdictRecord check_theorem_b(GroupAnalysis &ga, std::size_t p, const Subgroup &n,
                              int m, std::string_view condition,
                              const std::optional<Subgroup> &sylow = {});
VerdictRecord check_remark_psupersoluble(GroupAnalysis &ga, std::size_t p,
                                         const Subgroup &n, int m);

// Corollary catalog:
//   a-maximal, a-2maximal, a-minimal, a-2minimal      odd p, N_G(P) p-nilpotent
//   b-maximal, b-minimal                              (|G|, p-1) = 1
//   b-quaternion-free                                 p = 2, N soluble
//   b-2maximal, b-2minimal                            (|G|, p^2-1) = 1
//   b-2maximal-weak, b-2minimal-weak                  (|G|, p-1) = 1, N = G
//   min-prime-a4-free                                 p smallest, G A4-free
// Counterexamples to the two weak forms are reported as expected.
const std::vector<std::string> &corollary_ids();
// Throws UnknownCorollary.
VerdictRecord check_corollary(GroupAnalysis &ga, const std::string &id,
                              std::size_t p, const Subgroup &n);
std::vector<VerdictRecord> corollary_sweep(GroupAnalysis &ga, const std::string &id);

struct LemmaOptions {
  // Lemmas quantifying over all p-subgroups or all small subgroups of P
  // only run on groups up to this order.
  std::size_t subgroup_quantifier_bound = 100;
};

struct LemmaParams {
  std::size_t p = 0;
  std::optional<Subgroup> subgroup;
};

// Lemma catalog (parameters in brackets):
//   pi-property-quotient [N]        pi-normal-quotient [N]
//   normalizer-centralizer [p, N]   fstar-u-hypercenter [E]
//   pi-normal-meet-minimal [p, N]   pi-normal-minimal-p-group [p, L]
//   maximal-supplement-odd [p, L]   maximal-supplement-two [L]
//   minimal-subgroups-u-hypercenter [p, P]
//   minimal-subgroups-residual [p]
const std::vector<std::string> &lemma_ids();
// Throws UnknownLemma.
VerdictRecord check_lemma(GroupAnalysis &ga, const std::string &id,
                          const LemmaParams &params, const LemmaOptions &options = {});
std::vector<VerdictRecord> lemma_sweep(GroupAnalysis &ga, const std::string &id,
                                       const LemmaOptions &options = {});

std::vector<VerdictRecord> theorem_a_sweep(GroupAnalysis &ga);
std::vector<VerdictRecord> theorem_b_sweep(GroupAnalysis &ga);
std::vector<VerdictRecord> remark_sweep(GroupAnalysis &ga);

enum Suite : unsigned {
  kSuiteTheoremA = 1u << 0,
  kSuiteTheoremB = 1u << 1,
  kSuiteRemark = 1u << 2,
  kSuiteLemmas = 1u << 3,
  kSuiteCorollaries = 1u << 4,
  kSuiteAll = 0x1f,
};

std::string suite_names(unsigned suites);

struct HarnessConfig {
  unsigned suites = kSuiteAll;
  std::size_t max_order = 300;
  std::size_t lattice_cap = 2000;
  LemmaOptions lemmas;
  unsigned jobs = 1;
};

struct GroupSummary {
  std::string name;
  std::size_t order = 0;
  std::size_t degree = 0;
  std::optional<std::size_t> lattice_size;
  std::string skip_reason;
};

struct CorpusReport {
  std::string engine_version = kEngineVersion;
  HarnessConfig config;
  std::vector<GroupSummary> groups;
  std::vector<VerdictRecord> verdicts;
  std::vector<std::string> notes;
  std::map<std::string, double> timings;

  std::size_t count(Status s) const;
  std::vector<const VerdictRecord *> with_status(Status s) const;
  bool has_unexpected_counterexample() const { return count(Status::Counterexample) > 0; }
};

// Groups are processed in order of (order, name); per-group errors become
// SKIPPED records.
CorpusReport run_corpus(const std::vector<GroupPtr> &corpus, const HarnessConfig &config);

// Generators in 1-indexed cycle notation, e.g. "<(1 2 3), (1 2)>".
std::string describe(const Subgroup &s);

} // namespace pinilot
