#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <sys/wait.h>

#include "pinilot/corpus.hpp"
#include "pinilot/harness.hpp"
#include "pinilot/invariants.hpp"
#include "pinilot/pi_theory.hpp"
#include "pinilot/report.hpp"
#include "pinilot/structure.hpp"

using namespace pinilot;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Subgroup gen(const GroupPtr &g, const std::vector<Perm> &seed) {
  return generated_subgroup(g, seed);
}

Perm cyc(std::size_t n, std::initializer_list<std::initializer_list<Point>> c) {
  return Perm::from_cycles(n, c);
}

std::string join_ids(const std::vector<std::string> &v) {
  std::string out;
  for (const auto &s : v)
    out += (out.empty() ? "" : ",") + s;
  return out;
}

Outcome engine_sanity() {
  const auto s3 = symmetric_group(3), s4 = symmetric_group(4);
  const auto a5 = alternating_group(5);
  const SubgroupLattice lat(s4);
  std::vector<std::size_t> normals;
  for (SubgroupId n : lat.normal_ids())
    normals.push_back(lat.at(n).order());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto &c : lat.chief_pairs())
    pairs.emplace_back(c.lower.order(), c.upper.order());
  const Subgroup v4 = o_p(lat, 2);
  bool pairs_ok = pairs == std::vector<std::pair<std::size_t, std::size_t>>{{1, 4}, {4, 12}, {12, 24}};
  pairs_ok = pairs_ok && lat.chief_pairs()[0].upper == v4;
  const bool ok = s3->order() == 6 && s4->order() == 24 && a5->order() == 60 &&
                  lat.size() == 30 && normals == std::vector<std::size_t>{1, 4, 12, 24} &&
                  pairs_ok;
  std::ostringstream d;
  d << "|S3|=" << s3->order() << " |S4|=" << s4->order() << " |A5|=" << a5->order()
    << " S4 subgroups=" << lat.size() << " normals=" << normals.size()
    << " chief pairs=" << pairs.size();
  return {ok, d.str()};
}

Outcome dual_oracle() {
  std::size_t groups = 0, checks = 0, disagree = 0;
  for (const auto &g : builtin_corpus(200)) {
    ++groups;
    const SubgroupLattice lat(g);
    for (std::size_t p : pi_of(g->order()).primes) {
      ++checks;
      if (is_p_nilpotent(lat.whole(), p) != is_p_nilpotent_by_lattice(lat, lat.whole(), p))
        ++disagree;
    }
  }
  std::ostringstream d;
  d << groups << " groups, " << checks << " (group, p) pairs, " << disagree << " disagreements";
  return {disagree == 0 && groups > 0, d.str()};
}

Outcome definition_checks() {
  // Very large lattices get a fixed random sample of normals.
  constexpr std::size_t kFullCap = 3000, kSample = 64;
  std::mt19937 rng(7);
  std::size_t groups = 0, normals = 0, failures = 0, sampled = 0;
  for (const auto &g : builtin_corpus()) {
    const SubgroupLattice lat(g);
    PiAnalysis pi(lat);
    ++groups;
    std::vector<SubgroupId> ids = lat.normal_ids();
    if (lat.size() > kFullCap) {
      std::shuffle(ids.begin(), ids.end(), rng);
      ids.resize(std::min(ids.size(), kSample));
      ++sampled;
    }
    for (SubgroupId n : ids) {
      ++normals;
      failures += !pi.has_pi_property(n);
    }
    failures += !pi.has_pi_property(lat.trivial_id());
  }
  const auto s4 = symmetric_group(4);
  const SubgroupLattice lat(s4);
  const Subgroup d = gen(s4, {cyc(4, {{0, 1}, {2, 3}})});
  const auto f = pi_property_failures(lat, d);
  const bool s4_ok = !has_pi_property(lat, d) && f.size() == 1 && f[0].pair.lower.is_trivial() &&
                     f[0].pair.upper == o_p(lat, 2) &&
                     f[0].offending_primes.primes == std::vector<std::size_t>{3};
  std::ostringstream o;
  o << groups << " groups (" << sampled << " sampled), " << normals << " normal subgroups, "
    << failures
    << " failures; S4 <(1 2)(3 4)> offending primes "
    << (f.empty() ? std::string("none") : f[0].offending_primes.to_string());
  return {failures == 0 && s4_ok, o.str()};
}

HarnessConfig config_for(unsigned suites) {
  HarnessConfig cfg;
  cfg.suites = suites;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  return cfg;
}

Outcome lemma_suite() {
  const CorpusReport rep = run_corpus(builtin_corpus(), config_for(kSuiteLemmas));
  std::map<std::string, std::size_t> confirmed;
  for (const auto &v : rep.verdicts)
    if (v.status == Status::Confirmed)
      ++confirmed[v.check_id];
  std::vector<std::string> idle;
  for (const auto &id : lemma_ids())
    if (!confirmed.count(id))
      idle.push_back(id);
  std::ostringstream d;
  d << rep.verdicts.size() << " records, " << rep.count(Status::Counterexample)
    << " violations, " << rep.count(Status::Confirmed) << " confirmed";
  if (!idle.empty())
    d << "; never confirmed: " << join_ids(idle);
  return {rep.count(Status::Counterexample) == 0 && idle.empty(), d.str()};
}

std::size_t nonvacuous(const CorpusReport &rep, const std::string &id) {
  std::size_t n = 0;
  for (const auto &v : rep.verdicts)
    n += v.check_id == id && v.hypothesis_holds && v.status == Status::Confirmed &&
         v.conclusion_holds.value_or(false);
  return n;
}

Outcome theorem_a() {
  const CorpusReport rep = run_corpus(builtin_corpus(), config_for(kSuiteTheoremA));
  const std::size_t good = nonvacuous(rep, "theorem-a");
  std::ostringstream d;
  d << rep.verdicts.size() << " records, " << rep.count(Status::Counterexample)
    << " counterexamples, " << good << " non-vacuous confirmations";
  return {rep.count(Status::Counterexample) == 0 && good >= 20, d.str()};
}

Outcome theorem_b() {
  const CorpusReport rep = run_corpus(builtin_corpus(), config_for(kSuiteTheoremB));
  const std::size_t good = nonvacuous(rep, "theorem-b");
  std::map<std::string, std::size_t> per_condition;
  for (const auto &v : rep.verdicts)
    if (v.hypothesis_holds && v.status == Status::Confirmed)
      ++per_condition[v.condition];

  GroupAnalysis s4(symmetric_group(4));
  const auto r = check_theorem_b(s4, 2, s4.whole(), 2, "i");
  bool witness_ok = false;
  if (r.applicable && !r.hypothesis_holds && r.witness) {
    const Subgroup &w = r.witness->subgroup;
    bool exponent2 = true;
    for (Elem e : w.members())
      exponent2 = exponent2 && (e == 0 || w.group().element_order(e) == 2);
    witness_ok = w.order() == 4 && exponent2 && !is_normal(s4.whole(), w) &&
                 w.is_subgroup_of(s4.sylow_of(s4.lattice().whole_id(), 2));
  }
  std::ostringstream d;
  d << rep.verdicts.size() << " records, " << rep.count(Status::Counterexample)
    << " counterexamples, " << good << " non-vacuous confirmations (";
  for (const auto &[c, n] : per_condition)
    d << c << ":" << n << " ";
  d << "); S4 p=2 m=2 witness " << (r.witness ? describe(r.witness->subgroup) : "none");
  return {rep.count(Status::Counterexample) == 0 && good >= 10 && witness_ok, d.str()};
}

Outcome example_a5c5() {
  const auto g = a5_times_c5();
  const SubgroupLattice lat(g);
  PiAnalysis pi(lat);
  std::vector<SubgroupId> without;
  const auto &fives = lat.with_order(5);
  for (SubgroupId h : fives)
    if (!pi.p_nilpotent_supplement(h, 5))
      without.push_back(h);
  const Subgroup z = center(lat.whole());
  const bool unique = without.size() == 1 && lat.at(without[0]) == z && z.order() == 5;
  const bool normal = !without.empty() && lat.is_normal(without[0]);
  const bool pi_normal = !without.empty() && pi.is_pi_normal(without[0]);
  const bool soluble = is_p_soluble(lat, lat.whole(), 5);
  std::ostringstream d;
  d << fives.size() << " subgroups of order 5, " << without.size()
    << " without 5-nilpotent supplement (the Z5 factor: " << (unique ? "yes" : "no")
    << "), normal " << normal << ", Pi-normal " << pi_normal << ", 5-soluble " << soluble;
  return {unique && normal && pi_normal && !soluble, d.str()};
}

Outcome example_order75() {
  const auto g = order75_group();
  const SubgroupLattice lat(g);
  const Subgroup p = sylow_subgroup(lat, 5);
  const bool nilp = is_p_nilpotent(lat.whole(), 5);
  // subgroups of P of order p^2 and of order |P|/p^2
  std::vector<SubgroupId> two_min, two_max;
  for (SubgroupId id : lat.contained_in(p)) {
    if (lat.at(id).order() == 25)
      two_min.push_back(id);
    if (lat.at(id).order() == p.order() / 25)
      two_max.push_back(id);
  }
  const bool ok = g->order() == 75 && p.order() == 25 && !nilp && two_min.size() == 1 &&
                  lat.at(two_min[0]) == p && two_max.size() == 1 &&
                  lat.at(two_max[0]).is_trivial() && lat.is_normal(two_min[0]) &&
                  lat.is_normal(two_max[0]);
  std::ostringstream d;
  d << "|G|=" << g->order() << " |P|=" << p.order() << " 5-nilpotent " << nilp << ", "
    << two_min.size() << " 2-minimal (=P), " << two_max.size() << " 2-maximal (trivial)";
  return {ok, d.str()};
}

Outcome weak_corollaries() {
  bool ok = true;
  std::ostringstream d;
  auto probe = [&](GroupAnalysis &ga, std::size_t p) {
    for (const char *id : {"b-2maximal-weak", "b-2minimal-weak"}) {
      const auto r = check_corollary(ga, id, p, ga.whole());
      ok = ok && r.status == Status::ExpectedCounterexample;
      d << ga.group().name() << " p=" << p << " " << id << " " << to_string(r.status) << "; ";
    }
  };
  GroupAnalysis a4(alternating_group(4));
  GroupAnalysis g75(order75_group());
  probe(a4, 2);
  probe(g75, 5);
  const CorpusReport rep = run_corpus(builtin_corpus(), config_for(kSuiteCorollaries));
  std::size_t strict = 0, strict_cex = 0;
  for (const auto &v : rep.verdicts)
    if (v.check_id == "b-2maximal" || v.check_id == "b-2minimal") {
      ++strict;
      strict_cex += v.status == Status::Counterexample;
    }
  ok = ok && strict_cex == 0 && rep.count(Status::Counterexample) == 0;
  d << strict << " strict-form records, " << strict_cex << " counterexamples";
  return {ok, d.str()};
}

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "pinilot_acceptance";
  std::filesystem::create_directories(dir);
  std::string outs[2];
  int codes[2];
  for (int i = 0; i < 2; ++i) {
    const auto out = dir / ("run" + std::to_string(i) + ".json");
    const std::string cmd = std::string(PINILOT_CLI_PATH) +
                            " verify --theorem all --format json > " + out.string();
    codes[i] = WEXITSTATUS(std::system(cmd.c_str()));
    outs[i] = slurp(out);
  }
  const bool ok = codes[0] == 0 && codes[1] == 0 && !outs[0].empty() && outs[0] == outs[1];
  std::ostringstream d;
  d << "exit codes " << codes[0] << "," << codes[1] << "; " << outs[0].size() << " and "
    << outs[1].size() << " bytes, " << (outs[0] == outs[1] ? "identical" : "different");
  return {ok, d.str()};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"engine sanity", engine_sanity},
      {"dual p-nilpotency oracles agree", dual_oracle},
      {"Pi-property definition checks", definition_checks},
      {"lemma suite has no violations", lemma_suite},
      {"theorem A sweep", theorem_a},
      {"theorem B sweep", theorem_b},
      {"A5 x Z5 example", example_a5c5},
      {"order 75 example", example_order75},
      {"weakened corollaries", weak_corollaries},
      {"deterministic json report", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("criterion %2zu %s  %-34s %8.2fs  %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
