#include "pinilot/group_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pinilot {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string &msg) {
  throw GroupError(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_size(std::string_view s, std::size_t &out) {
  if (s.empty())
    return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

Perm cycles_or_throw(std::string_view text, std::size_t degree, std::size_t line) {
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> seen(degree, false);
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (c != '(')
      fail(line, "expected '(' in cycle list");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos)
      fail(line, "unterminated cycle");
    std::vector<Point> cycle;
    std::istringstream body{std::string(text.substr(i + 1, close - i - 1))};
    std::string tok;
    while (body >> tok) {
      std::size_t v = 0;
      if (!parse_size(tok, v))
        fail(line, "bad point '" + tok + "'");
      if (v < 1 || v > degree)
        fail(line, "point " + tok + " outside 1.." + std::to_string(degree));
      if (seen[v - 1])
        fail(line, "point " + tok + " repeated; cycles must be disjoint");
      seen[v - 1] = true;
      cycle.push_back(static_cast<Point>(v - 1));
    }
    if (cycle.size() > 1)
      cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  return Perm::from_cycles(degree, cycles);
}

} // namespace

Perm parse_cycles(std::string_view text, std::size_t degree) {
  return cycles_or_throw(text, degree, 1);
}

GroupSpecFile parse_group_spec(std::string_view text) {
  GroupSpecFile spec;
  bool have_name = false, have_degree = false;
  std::vector<std::pair<std::size_t, std::string>> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    const auto sp = line.find_first_of(" \t");
    const std::string_view key = line.substr(0, sp);
    const std::string_view rest =
        sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
    if (key == "name") {
      if (have_name)
        fail(line_no, "duplicate name");
      if (rest.empty() || rest.find_first_of(" \t") != std::string_view::npos)
        fail(line_no, "name must be a single token");
      spec.name = std::string(rest);
      have_name = true;
    } else if (key == "degree") {
      if (have_degree)
        fail(line_no, "duplicate degree");
      if (!parse_size(rest, spec.degree) || spec.degree < 1)
        fail(line_no, "degree must be a positive integer");
      if (spec.degree > 0xffff)
        fail(line_no, "degree too large");
      have_degree = true;
    } else if (key == "gen") {
      if (rest.empty())
        fail(line_no, "gen needs a cycle list");
      gens.emplace_back(line_no, std::string(rest));
    } else {
      fail(line_no, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!have_name)
    fail(line_no, "missing name");
  if (!have_degree)
    fail(line_no, "missing degree");
  if (gens.empty())
    fail(line_no, "no gen lines");
  for (const auto &[ln, g] : gens) {
    cycles_or_throw(g, spec.degree, ln);
    spec.generators.push_back(g);
  }
  return spec;
}

GroupPtr build_from_spec(const GroupSpecFile &spec, const BuildOptions &options) {
  std::vector<Perm> gens;
  for (const auto &g : spec.generators)
    gens.push_back(parse_cycles(g, spec.degree));
  BuildOptions opts = options;
  opts.name = spec.name;
  return build_group(spec.degree, gens, opts);
}

GroupPtr parse_group_file(std::string_view text, const BuildOptions &options) {
  return build_from_spec(parse_group_spec(text), options);
}

GroupPtr load_group_file(const std::filesystem::path &path, const BuildOptions &options) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw GroupError(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_group_file(ss.str(), options);
  } catch (const GroupError &e) {
    if (e.kind() != ErrorKind::ParseError)
      throw;
    std::string msg = e.what();
    const std::string prefix = std::string(to_string(ErrorKind::ParseError)) + ": ";
    if (msg.rfind(prefix, 0) == 0)
      msg.erase(0, prefix.size());
    throw GroupError(ErrorKind::ParseError, path.filename().string() + ": " + msg);
  }
}

std::string export_group_file(const FiniteGroup &g) {
  std::ostringstream os;
  os << "name " << (g.name().empty() ? "G" : g.name()) << "\n";
  os << "degree " << g.degree() << "\n";
  if (g.generators().empty())
    os << "gen ()\n";
  for (const Perm &p : g.generators())
    os << "gen " << p.to_cycle_string(1) << "\n";
  return os.str();
}

} // namespace pinilot
