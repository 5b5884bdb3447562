#include "pinilot/report.hpp"

#include <cstdio>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

namespace pinilot {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr Status kStatuses[] = {Status::Confirmed,      Status::HypothesisFails,
                                Status::NotApplicable,  Status::Counterexample,
                                Status::ExpectedCounterexample, Status::Skipped};

template <class T>
ordered_json opt(const std::optional<T> &v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json verdict_json(const VerdictRecord &r) {
  ordered_json j;
  j["check_id"] = r.check_id;
  j["group"] = r.group;
  j["group_order"] = r.group_order;
  j["p"] = opt(r.p);
  j["N_order"] = opt(r.n_order);
  j["N_id"] = opt(r.n_id);
  j["m"] = opt(r.m);
  j["condition"] = r.condition.empty() ? ordered_json(nullptr) : ordered_json(r.condition);
  j["status"] = std::string(to_string(r.status));
  j["applicable"] = r.applicable;
  j["hypothesis_holds"] = r.hypothesis_holds;
  j["conclusion_holds"] = opt(r.conclusion_holds);
  ordered_json clauses = ordered_json::array();
  for (const auto &c : r.clauses) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["value"] = opt(c.value);
    clauses.push_back(std::move(cj));
  }
  j["clauses"] = std::move(clauses);
  if (r.witness) {
    ordered_json w;
    w["role"] = r.witness->role;
    w["order"] = r.witness->subgroup.order();
    w["generators"] = describe(r.witness->subgroup);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["reason"] = r.reason;
  return j;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string json_report(const CorpusReport &report, bool include_timings) {
  ordered_json j;
  j["engine_version"] = report.engine_version;

  ordered_json cfg;
  cfg["suites"] = suite_names(report.config.suites);
  cfg["max_order"] = report.config.max_order;
  cfg["lattice_cap"] = report.config.lattice_cap;
  cfg["subgroup_quantifier_bound"] = report.config.lemmas.subgroup_quantifier_bound;
  j["config"] = std::move(cfg);

  ordered_json corpus;
  corpus["group_count"] = report.groups.size();
  std::map<std::size_t, std::size_t> hist;
  for (const auto &g : report.groups)
    ++hist[g.order];
  ordered_json h = ordered_json::object();
  for (const auto &[order, n] : hist)
    h[std::to_string(order)] = n;
  corpus["order_histogram"] = std::move(h);
  ordered_json groups = ordered_json::array();
  for (const auto &g : report.groups) {
    ordered_json gj;
    gj["name"] = g.name;
    gj["order"] = g.order;
    gj["degree"] = g.degree;
    gj["lattice_size"] = opt(g.lattice_size);
    if (!g.skip_reason.empty())
      gj["skip_reason"] = g.skip_reason;
    groups.push_back(std::move(gj));
  }
  corpus["groups"] = std::move(groups);
  j["corpus"] = std::move(corpus);

  ordered_json counts;
  for (Status s : kStatuses)
    counts[std::string(to_string(s))] = report.count(s);
  j["status_counts"] = std::move(counts);

  ordered_json verdicts = ordered_json::array();
  ordered_json cex = ordered_json::array();
  ordered_json expected = ordered_json::array();
  ordered_json skipped = ordered_json::array();
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    const auto &r = report.verdicts[i];
    verdicts.push_back(verdict_json(r));
    if (r.status == Status::Counterexample)
      cex.push_back(i);
    else if (r.status == Status::ExpectedCounterexample)
      expected.push_back(i);
    else if (r.status == Status::Skipped)
      skipped.push_back(i);
  }
  j["verdicts"] = std::move(verdicts);
  // Indices into verdicts.
  j["counterexamples"] = std::move(cex);
  j["expected_counterexamples"] = std::move(expected);
  j["skipped"] = std::move(skipped);
  j["notes"] = report.notes;
  if (include_timings) {
    ordered_json t = ordered_json::object();
    for (const auto &[phase, secs] : report.timings)
      t[phase] = secs;
    j["timings"] = std::move(t);
  }
  return j.dump(1) + "\n";
}

std::string text_report(const CorpusReport &report, bool include_timings) {
  std::ostringstream os;
  os << "pinilot " << report.engine_version << "  suites " << suite_names(report.config.suites)
     << "  max_order " << report.config.max_order << "\n";
  std::size_t skipped_groups = 0;
  for (const auto &g : report.groups)
    skipped_groups += !g.skip_reason.empty();
  os << "groups: " << report.groups.size() << " (" << skipped_groups << " skipped)\n\n";

  std::map<std::string, std::map<Status, std::size_t>> table;
  for (const auto &r : report.verdicts)
    ++table[r.check_id][r.status];

  const char *heads[] = {"CONF", "HYPF", "N/A", "CEX", "EXPCEX", "SKIP"};
  char line[160];
  std::snprintf(line, sizeof line, "%-34s", "check");
  os << line;
  for (const char *h : heads) {
    std::snprintf(line, sizeof line, "%8s", h);
    os << line;
  }
  os << "\n";
  std::map<Status, std::size_t> total;
  for (const auto &[id, counts] : table) {
    std::snprintf(line, sizeof line, "%-34s", id.c_str());
    os << line;
    for (Status s : kStatuses) {
      const auto it = counts.find(s);
      const std::size_t n = it == counts.end() ? 0 : it->second;
      total[s] += n;
      std::snprintf(line, sizeof line, "%8zu", n);
      os << line;
    }
    os << "\n";
  }
  std::snprintf(line, sizeof line, "%-34s", "total");
  os << line;
  for (Status s : kStatuses) {
    std::snprintf(line, sizeof line, "%8zu", total[s]);
    os << line;
  }
  os << "\n";

  auto list = [&](Status s, const char *title) {
    const auto rs = report.with_status(s);
    if (rs.empty())
      return;
    os << "\n" << title << ":\n";
    for (const VerdictRecord *r : rs) {
      os << "  " << r->check_id << " " << r->group;
      if (r->p)
        os << " p=" << *r->p;
      if (r->n_order)
        os << " |N|=" << *r->n_order;
      if (r->m)
        os << " m=" << *r->m;
      if (!r->condition.empty())
        os << " (" << r->condition << ")";
      if (!r->reason.empty())
        os << ": " << r->reason;
      os << "\n";
    }
  };
  list(Status::Counterexample, "counterexamples");
  list(Status::ExpectedCounterexample, "expected counterexamples");

  if (!report.notes.empty()) {
    os << "\nnotes:\n";
    for (const auto &n : report.notes)
      os << "  " << n << "\n";
  }
  if (include_timings && !report.timings.empty()) {
    os << "\ntimings (s, summed over groups):\n";
    for (const auto &[phase, secs] : report.timings)
      os << "  " << phase << " " << fixed(secs, 3) << "\n";
  }
  return os.str();
}

} // namespace

std::string emit_report(const CorpusReport &report, ReportFormat format, bool include_timings) {
  return format == ReportFormat::Json ? json_report(report, include_timings)
                                      : text_report(report, include_timings);
}

} // namespace pinilot
