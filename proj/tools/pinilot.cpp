#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "pinilot/corpus.hpp"
#include "pinilot/group_file.hpp"
#include "pinilot/harness.hpp"
#include "pinilot/invariants.hpp"
#include "pinilot/lattice.hpp"
#include "pinilot/pi_theory.hpp"
#include "pinilot/report.hpp"
#include "pinilot/simd/bitset_kernels.hpp"
#include "pinilot/structure.hpp"

using namespace pinilot;

namespace {

constexpr int kExitUsage = 2;

std::size_t env_max_order() {
  if (const char *v = std::getenv("PINILOT_MAX_ORDER")) {
    try {
      std::size_t pos = 0;
      const unsigned long n = std::stoul(v, &pos);
      if (pos == std::string(v).size() && n > 0)
        return n;
    } catch (const std::exception &) {
    }
    throw GroupError(ErrorKind::ParseError,
                     std::string("PINILOT_MAX_ORDER is not a positive integer: ") + v);
  }
  return kDefaultMaxOrder;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string line_for(const std::string &label, const Subgroup &s) {
  std::ostringstream os;
  os << "  " << label << std::string(label.size() < 14 ? 14 - label.size() : 1, ' ')
     << "order " << s.order() << "  " << describe(s) << "\n";
  return os.str();
}

int run_analyze(const std::string &file, std::size_t p_only, std::size_t max_order,
                std::size_t lattice_cap) {
  const GroupPtr g = load_group_file(file, BuildOptions{max_order, {}});
  const SubgroupLattice lat(g, LatticeOptions{lattice_cap});
  const Subgroup G = lat.whole();
  const PrimeSet primes = pi_of(g->order());
  if (p_only && !primes.contains(p_only))
    throw GroupError(ErrorKind::BadPrime,
                     std::to_string(p_only) + " is not a prime divisor of |G|");

  std::cout << "group " << g->name() << "  order " << g->order() << "  degree "
            << g->degree() << "\n";
  std::cout << "subgroups " << lat.size() << "  normal " << lat.normal_ids().size() << "\n";
  std::cout << "primes " << primes.to_string() << "\n\n";

  std::cout << "classifiers\n";
  std::cout << "  abelian       " << yn(g->is_abelian()) << "\n";
  std::cout << "  nilpotent     " << yn(is_nilpotent(G)) << "\n";
  std::cout << "  supersoluble  " << yn(is_supersoluble(lat, G)) << "\n";
  std::cout << "  soluble       " << yn(is_soluble(G)) << "\n";
  std::cout << "  A4-free       " << yn(is_a4_free(lat, G)) << "\n";
  std::cout << "  Q8-free       " << yn(is_quaternion_free(lat, G)) << "\n\n";

  std::cout << "characteristic subgroups\n";
  std::cout << line_for("Z(G)", center(G));
  std::cout << line_for("G'", derived_subgroup(G));
  std::cout << line_for("Phi(G)", frattini(lat));
  std::cout << line_for("F(G)", fitting(lat));
  std::cout << line_for("F*(G)", generalized_fitting(lat));
  std::cout << line_for("Z_inf(G)", hypercenter(G));
  try {
    std::cout << line_for("Z_inf^U(G)", u_hypercenter(lat));
  } catch (const GroupError &e) {
    std::cout << "  Z_inf^U(G)    " << e.what() << "\n";
  }
  std::cout << "\n";

  for (std::size_t p : primes.primes) {
    if (p_only && p != p_only)
      continue;
    std::cout << "p = " << p << "\n";
    std::cout << line_for("Sylow", sylow_subgroup(lat, p));
    std::cout << line_for("O_p", o_p(lat, p));
    std::cout << line_for("O_p'", o_p_prime(lat, p));
    std::cout << line_for("O^p", p_residual(G, p));
    std::cout << "  p-nilpotent   " << yn(is_p_nilpotent(G, p)) << "\n";
    std::cout << "  p-soluble     " << yn(is_p_soluble(lat, G, p)) << "\n";
    std::cout << "  p-supersol.   " << yn(is_p_supersoluble(lat, G, p)) << "\n\n";
  }

  std::cout << "chief series\n";
  const auto series = chief_series(lat);
  for (std::size_t i = 0; i < series.size(); ++i) {
    std::cout << line_for("G" + std::to_string(i), series[i]);
    if (i + 1 < series.size())
      std::cout << "    factor order " << series[i + 1].order() / series[i].order() << "\n";
  }
  return 0;
}

Subgroup parse_subgroup(const GroupPtr &g, const std::string &text) {
  std::vector<Perm> gens;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t");
    if (b != std::string::npos)
      gens.push_back(parse_cycles(cur.substr(b), g->degree()));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ';')
      flush();
    else
      cur += c;
  }
  flush();
  for (const Perm &p : gens)
    if (!g->index_of(p))
      throw GroupError(ErrorKind::NotAnElement, p.to_cycle_string(1) + " is not in " + g->name());
  if (gens.empty())
    gens.push_back(Perm::identity(g->degree()));
  return generated_subgroup(g, gens);
}

int run_pi_check(const std::string &file, const std::string &subgroup, bool witness,
                 std::size_t max_order, std::size_t lattice_cap) {
  const GroupPtr g = load_group_file(file, BuildOptions{max_order, {}});
  const SubgroupLattice lat(g, LatticeOptions{lattice_cap});
  const Subgroup h = parse_subgroup(g, subgroup);
  const SubgroupId hid = lat.id_of(h);
  PiAnalysis pi(lat);

  std::cout << "group " << g->name() << "  order " << g->order() << "\n";
  std::cout << "H = " << describe(h) << "  order " << h.order() << "  index "
            << g->order() / h.order() << "  normal " << yn(lat.is_normal(hid)) << "\n";

  const auto failures = pi.pi_property_failures(hid);
  std::cout << "pi-property      " << yn(failures.empty()) << "\n";
  for (const auto &f : failures)
    std::cout << "  fails at chief pair (" << f.pair.lower.order() << ", "
              << f.pair.upper.order() << "): |HK/K n L/K| = " << f.intersection_order
              << ", normalizer index " << f.normalizer_index << ", offending primes "
              << f.offending_primes.to_string() << "\n";

  const auto &sup = pi.pi_supplement_witness(hid);
  const auto &nor = pi.pi_normal_witness(hid);
  std::cout << "pi-supplemented  " << yn(sup.has_value()) << "\n";
  std::cout << "pi-normal        " << yn(nor.has_value()) << "\n";
  if (witness) {
    auto show = [](const char *label, const std::optional<PiNormalWitness> &w) {
      if (!w)
        return;
      std::cout << label << "\n";
      std::cout << line_for("T", w->t);
      std::cout << line_for("I", w->i);
    };
    show("supplement witness", sup);
    show("pi-normal witness", nor);
  }
  return 0;
}

struct VerifyArgs {
  std::string theorem = "all";
  std::string corpus_dir;
  bool no_builtin = false;
  std::optional<std::size_t> max_order;
  unsigned jobs = 0;
  std::string format = "json";
  std::string out;
  bool timings = false;
  std::size_t lattice_cap = 2000;
  std::size_t lemma_bound = 100;
};

unsigned suites_for(const std::string &t) {
  if (t == "A")
    return kSuiteTheoremA;
  if (t == "B")
    return kSuiteTheoremB;
  if (t == "remark1")
    return kSuiteRemark;
  if (t == "lemmas")
    return kSuiteLemmas;
  if (t == "corollaries")
    return kSuiteCorollaries;
  return kSuiteAll;
}

int run_verify(const VerifyArgs &a) {
  HarnessConfig config;
  config.suites = suites_for(a.theorem);
  config.max_order = a.max_order ? *a.max_order : env_max_order();
  if (config.max_order > kMaxOrderLimit)
    throw GroupError(ErrorKind::ClosureExceedsBound,
                     "max order " + std::to_string(config.max_order) + " exceeds " +
                         std::to_string(kMaxOrderLimit));
  config.lattice_cap = a.lattice_cap;
  config.lemmas.subgroup_quantifier_bound = a.lemma_bound;
  config.jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());

  std::vector<GroupPtr> corpus;
  if (!a.no_builtin)
    corpus = builtin_corpus(config.max_order);
  if (!a.corpus_dir.empty())
    merge_corpus(corpus, load_corpus_dir(a.corpus_dir, config.max_order));

  const CorpusReport report = run_corpus(corpus, config);
  const std::string text =
      emit_report(report, a.format == "text" ? ReportFormat::Text : ReportFormat::Json,
                  a.timings);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f)
      throw GroupError(ErrorKind::ParseError, "cannot write " + a.out);
    f << text;
  }
  if (report.has_unexpected_counterexample()) {
    std::cerr << "pinilot: " << report.count(Status::Counterexample)
              << " unexpected counterexample(s)\n";
    return 1;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"pinilot: finite permutation groups, Pi-property and p-nilpotency checks"};
  app.require_subcommand(1);
  std::string simd;
  app.add_option("--simd", simd, "Bitset kernel variant")
      ->check(CLI::IsMember({"scalar", "avx2"}));
  std::size_t lattice_cap = kDefaultLatticeBudget;
  std::optional<std::size_t> max_order;

  auto *analyze = app.add_subcommand("analyze", "Classifiers, characteristic subgroups, chief series");
  std::string file;
  std::size_t p_only = 0;
  analyze->add_option("file", file, "Group file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--p", p_only, "Restrict the per-prime section to P");
  analyze->add_option("--max-order", max_order, "Closure bound");
  analyze->add_option("--lattice-cap", lattice_cap, "Subgroup lattice budget");

  auto *pic = app.add_subcommand("pi-check", "Pi-property, Pi-supplemented and Pi-normal tests");
  std::string subgroup;
  bool witness = false;
  pic->add_option("file", file, "Group file")->required()->check(CLI::ExistingFile);
  pic->add_option("--subgroup", subgroup, "Generators, separated by ',' or ';'")->required();
  pic->add_flag("--witness", witness, "Print the supplement witnesses");
  pic->add_option("--max-order", max_order, "Closure bound");
  pic->add_option("--lattice-cap", lattice_cap, "Subgroup lattice budget");

  auto *verify = app.add_subcommand("verify", "Run the theorem harness over a corpus");
  VerifyArgs va;
  verify->add_option("--theorem", va.theorem, "Suite")
      ->check(CLI::IsMember({"A", "B", "remark1", "lemmas", "corollaries", "all"}));
  verify->add_option("--corpus", va.corpus_dir, "Directory of *.grp files")
      ->check(CLI::ExistingDirectory);
  verify->add_flag("--no-builtin", va.no_builtin, "Skip the built-in corpus");
  verify->add_option("--max-order", va.max_order, "Largest group order");
  verify->add_option("--jobs", va.jobs, "Worker threads (default: hardware)");
  verify->add_option("--format", va.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", va.out, "Write the report here");
  verify->add_flag("--timings", va.timings, "Include per-phase timings");
  verify->add_option("--lattice-cap", va.lattice_cap, "Skip groups with more subgroups");
  verify->add_option("--lemma-bound", va.lemma_bound,
                     "Largest order for lemmas quantifying over subgroups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (!simd.empty() && !simd::select_kernels(simd)) {
      std::cerr << "pinilot: kernel variant " << simd << " unavailable\n";
      return kExitUsage;
    }
    const std::size_t bound = max_order ? *max_order : env_max_order();
    if (*analyze)
      return run_analyze(file, p_only, std::min(bound, kMaxOrderLimit), lattice_cap);
    if (*pic)
      return run_pi_check(file, subgroup, witness, std::min(bound, kMaxOrderLimit),
                          lattice_cap);
    return run_verify(va);
  } catch (const GroupError &e) {
    std::cerr << "pinilot: " << e.what() << "\n";
    return kExitUsage;
  }
}
