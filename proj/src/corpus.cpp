#include "pinilot/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pinilot/group_file.hpp"

namespace pinilot {

namespace {

BuildOptions named(const BuildOptions &options, const std::string &fallback) {
  BuildOptions out = options;
  if (out.name.empty())
    out.name = fallback;
  return out;
}

Perm cycle_perm(std::size_t degree, std::size_t start, std::size_t len) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < len; ++i)
    images[start + i] = static_cast<Point>(start + (i + 1) % len);
  return Perm(std::move(images));
}

long mod(long a, long n) { return ((a % n) + n) % n; }

// Right action of a 2x2 matrix over F3 on the 8 nonzero row vectors.
Perm f3_matrix_perm(const IntMatrix &m) {
  std::vector<Point> images(8);
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y) {
      if (x == 0 && y == 0)
        continue;
      const long nx = mod(x * m[0][0] + y * m[1][0], 3);
      const long ny = mod(x * m[0][1] + y * m[1][1], 3);
      images[static_cast<std::size_t>(3 * x + y - 1)] = static_cast<Point>(3 * nx + ny - 1);
    }
  return Perm(std::move(images));
}

GroupPtr direct(const GroupPtr &a, const GroupPtr &b, const std::string &name,
                std::size_t max_order) {
  return direct_product(a, b, BuildOptions{max_order, name}).group;
}

struct Builder {
  std::string name;
  std::size_t order;
  std::function<GroupPtr(const BuildOptions &)> build;
};

const std::vector<Builder> &catalog() {
  static const std::vector<Builder> entries = [] {
    std::vector<Builder> out;
    auto add = [&](std::string name, std::size_t order,
                   std::function<GroupPtr(const BuildOptions &)> fn) {
      out.push_back({std::move(name), order, std::move(fn)});
    };
    auto c = [](std::size_t n) { return cyclic_group(n); };
    auto prod = [&](std::string name, std::function<GroupPtr()> a,
                    std::function<GroupPtr()> b, std::size_t order) {
      add(name, order, [name, a, b](const BuildOptions &o) {
        return direct(a(), b(), name, o.max_order);
      });
    };
    auto semi = [&](std::string name, std::size_t n, std::size_t k, std::size_t q,
                    IntMatrix m) {
      std::size_t order = q;
      for (std::size_t i = 0; i < k; ++i)
        order *= n;
      add(name, order, [n, k, q, m](const BuildOptions &o) {
        return matrix_semidirect(n, k, cyclic_group(q), {m}, o);
      });
    };

    for (std::size_t n = 1; n <= 32; ++n)
      add("C" + std::to_string(n), n, [n](const BuildOptions &o) { return cyclic_group(n, o); });
    for (std::size_t n = 3; n <= 16; ++n)
      add("D" + std::to_string(2 * n), 2 * n,
          [n](const BuildOptions &o) { return dihedral_group(n, o); });
    for (std::size_t n = 2; n <= 8; ++n)
      add("Q" + std::to_string(4 * n), 4 * n,
          [n](const BuildOptions &o) { return dicyclic_group(n, o); });
    for (const auto &[p, kmax] : std::vector<std::pair<std::size_t, std::size_t>>{
             {2, 7}, {3, 4}, {5, 3}, {7, 2}, {11, 2}}) {
      std::size_t order = p;
      for (std::size_t k = 2; k <= kmax; ++k) {
        order *= p;
        add("C" + std::to_string(p) + "^" + std::to_string(k), order,
            [p = p, k](const BuildOptions &o) { return elementary_abelian_group(p, k, o); });
      }
    }
    for (std::size_t n = 3; n <= 5; ++n) {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= n; ++i)
        f *= i;
      add("S" + std::to_string(n), f, [n](const BuildOptions &o) { return symmetric_group(n, o); });
      if (n >= 4)
        add("A" + std::to_string(n), f / 2,
            [n](const BuildOptions &o) { return alternating_group(n, o); });
    }
    add("SL2_3", 24, [](const BuildOptions &o) { return sl2_3(o); });
    add("GL2_3", 48, [](const BuildOptions &o) { return gl2_3(o); });
    add("PSL2_7", 168, [](const BuildOptions &o) { return psl2_7(o); });
    add("C5C5_rtimes_C3", 75, [](const BuildOptions &o) { return order75_group(o); });
    add("A5xC5", 300, [](const BuildOptions &o) { return a5_times_c5(o); });

    // Semidirect products C_n^k x| C_q.
    semi("C3_rtimes_C8", 3, 1, 8, {{2}});
    semi("C5_rtimes_C4", 5, 1, 4, {{2}});
    semi("C5_rtimes_C8", 5, 1, 8, {{2}});
    semi("C7_rtimes_C3", 7, 1, 3, {{2}});
    semi("C7_rtimes_C6", 7, 1, 6, {{3}});
    semi("C7_rtimes_C9", 7, 1, 9, {{2}});
    semi("C9_rtimes_C3", 9, 1, 3, {{4}});
    semi("C11_rtimes_C5", 11, 1, 5, {{3}});
    semi("C11_rtimes_C10", 11, 1, 10, {{2}});
    semi("C13_rtimes_C3", 13, 1, 3, {{3}});
    semi("C13_rtimes_C4", 13, 1, 4, {{5}});
    semi("C19_rtimes_C3", 19, 1, 3, {{7}});
    semi("C31_rtimes_C3", 31, 1, 3, {{5}});
    semi("C31_rtimes_C5", 31, 1, 5, {{2}});
    semi("C3C3_rtimes_C2", 3, 2, 2, {{-1, 0}, {0, -1}});
    semi("C3C3_rtimes_C3", 3, 2, 3, {{1, 1}, {0, 1}});
    semi("C3C3_rtimes_C4", 3, 2, 4, {{0, -1}, {1, 0}});
    semi("C5C5_rtimes_C2", 5, 2, 2, {{-1, 0}, {0, -1}});
    semi("C5C5_rtimes_C4", 5, 2, 4, {{0, -1}, {1, 0}});
    semi("C5C5_rtimes_C5", 5, 2, 5, {{1, 1}, {0, 1}});
    semi("C7C7_rtimes_C3", 7, 2, 3, {{2, 0}, {0, 4}});
    semi("C2C2C2_rtimes_C7", 2, 3, 7, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}});
    semi("C2C2C2C2_rtimes_C3", 2, 4, 3,
         {{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});
    semi("C2C2C2C2_rtimes_C5", 2, 4, 5,
         {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}});
    add("C3C3_rtimes_Q8", 72, [](const BuildOptions &o) {
      return matrix_semidirect(3, 2, dicyclic_group(2), {{{0, -1}, {1, 0}}, {{1, 1}, {1, 2}}},
                               o);
    });

    auto s3 = [] { return symmetric_group(3); };
    auto s4 = [] { return symmetric_group(4); };
    auto a4 = [] { return alternating_group(4); };
    auto a5 = [] { return alternating_group(5); };
    auto d8 = [] { return dihedral_group(4); };
    auto d10 = [] { return dihedral_group(5); };
    auto q8 = [] { return dicyclic_group(2); };
    auto cc = [c](std::size_t n) { return [c, n] { return c(n); }; };

    prod("C2xC4", cc(2), cc(4), 8);
    prod("C2xC8", cc(2), cc(8), 16);
    prod("C4xC4", cc(4), cc(4), 16);
    prod("C2xC16", cc(2), cc(16), 32);
    prod("C4xC8", cc(4), cc(8), 32);
    prod("C2xC6", cc(2), cc(6), 12);
    prod("C3xC6", cc(3), cc(6), 18);
    prod("C3xC9", cc(3), cc(9), 27);
    prod("C6xC6", cc(6), cc(6), 36);
    prod("C2xC2xC4", [] { return elementary_abelian_group(2, 2); }, cc(4), 16);
    prod("C3xS3", cc(3), s3, 18);
    prod("S3xC4", s3, cc(4), 24);
    prod("S3xC5", s3, cc(5), 30);
    prod("S3xC7", s3, cc(7), 42);
    prod("S3xS3", s3, s3, 36);
    prod("C3xD8", cc(3), d8, 24);
    prod("C3xQ8", cc(3), q8, 24);
    prod("C2xD8", cc(2), d8, 16);
    prod("C2xQ8", cc(2), q8, 16);
    prod("C5xD8", cc(5), d8, 40);
    prod("C2xA4", cc(2), a4, 24);
    prod("C3xA4", cc(3), a4, 36);
    prod("C4xA4", cc(4), a4, 48);
    prod("C5xA4", cc(5), a4, 60);
    prod("C2xC2xA4", [] { return elementary_abelian_group(2, 2); }, a4, 48);
    prod("A4xS3", a4, s3, 72);
    prod("A4xA4", a4, a4, 144);
    prod("C2xS4", cc(2), s4, 48);
    prod("S4xC3", s4, cc(3), 72);
    prod("S4xC5", s4, cc(5), 120);
    prod("S4xS3", s4, s3, 144);
    prod("C3xD10", cc(3), d10, 30);
    prod("S3xD10", s3, d10, 60);
    prod("C5xD10", cc(5), d10, 50);
    prod("D8xS3", d8, s3, 48);
    prod("Q8xS3", q8, s3, 48);
    prod("C2xSL2_3", cc(2), [] { return sl2_3(); }, 48);
    prod("C3xSL2_3", cc(3), [] { return sl2_3(); }, 72);
    prod("C2xC2xC2xS3", [] { return elementary_abelian_group(2, 3); }, s3, 48);
    prod("C2xC5_rtimes_C4", cc(2),
         [] { return matrix_semidirect(5, 1, cyclic_group(4), {{{2}}}); }, 40);
    prod("C3xC7_rtimes_C3", cc(3),
         [] { return matrix_semidirect(7, 1, cyclic_group(3), {{{2}}}); }, 63);
    prod("C2xC7_rtimes_C3", cc(2),
         [] { return matrix_semidirect(7, 1, cyclic_group(3), {{{2}}}); }, 42);
    prod("C5xC5C5_rtimes_C3", cc(5), [] { return order75_group(); }, 375);
    prod("A5xC2", a5, cc(2), 120);
    prod("A5xC3", a5, cc(3), 180);
    prod("A5xC4", a5, cc(4), 240);
    prod("S5xC2", [] { return symmetric_group(5); }, cc(2), 240);

    std::sort(out.begin(), out.end(), [](const Builder &a, const Builder &b) {
      return a.order != b.order ? a.order < b.order : a.name < b.name;
    });
    return out;
  }();
  return entries;
}

} // namespace

GroupPtr cyclic_group(std::size_t n, const BuildOptions &options) {
  const auto opts = named(options, "C" + std::to_string(n));
  if (n <= 1)
    return build_group(1, {Perm::identity(1)}, opts);
  return build_group(n, {cycle_perm(n, 0, n)}, opts);
}

GroupPtr dihedral_group(std::size_t n, const BuildOptions &options) {
  if (n < 3)
    throw GroupError(ErrorKind::MalformedPermutation, "dihedral group needs n >= 3");
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i)
    refl[i] = static_cast<Point>((n - i) % n);
  return build_group(n, {cycle_perm(n, 0, n), Perm(std::move(refl))},
                     named(options, "D" + std::to_string(2 * n)));
}

GroupPtr dicyclic_group(std::size_t n, const BuildOptions &options) {
  if (n < 2)
    throw GroupError(ErrorKind::MalformedPermutation, "dicyclic group needs n >= 2");
  // Point j*2n + i is a^i x^j; generators act by right multiplication.
  const std::size_t m = 2 * n;
  std::vector<Point> a(2 * m), x(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = static_cast<Point>((i + 1) % m);
    a[m + i] = static_cast<Point>(m + (i + m - 1) % m);
    x[i] = static_cast<Point>(m + i);
    x[m + i] = static_cast<Point>((i + n) % m);
  }
  return build_group(2 * m, {Perm(std::move(a)), Perm(std::move(x))},
                     named(options, "Q" + std::to_string(4 * n)));
}

GroupPtr elementary_abelian_group(std::size_t p, std::size_t k, const BuildOptions &options) {
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < k; ++i)
    gens.push_back(cycle_perm(p * k, p * i, p));
  return build_group(p * k, gens,
                     named(options, "C" + std::to_string(p) + "^" + std::to_string(k)));
}

GroupPtr symmetric_group(std::size_t n, const BuildOptions &options) {
  const auto opts = named(options, "S" + std::to_string(n));
  if (n <= 1)
    return build_group(1, {Perm::identity(1)}, opts);
  return build_group(n, {cycle_perm(n, 0, n), cycle_perm(n, 0, 2)}, opts);
}

GroupPtr alternating_group(std::size_t n, const BuildOptions &options) {
  const auto opts = named(options, "A" + std::to_string(n));
  if (n <= 2)
    return build_group(1, {Perm::identity(1)}, opts);
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(Perm::from_cycles(n, {{0, 1, static_cast<Point>(i)}}));
  return build_group(n, gens, opts);
}

GroupPtr sl2_3(const BuildOptions &options) {
  return build_group(8, {f3_matrix_perm({{1, 1}, {0, 1}}), f3_matrix_perm({{0, 2}, {1, 0}})},
                     named(options, "SL2_3"));
}

GroupPtr gl2_3(const BuildOptions &options) {
  return build_group(8,
                     {f3_matrix_perm({{1, 1}, {0, 1}}), f3_matrix_perm({{0, 2}, {1, 0}}),
                      f3_matrix_perm({{2, 0}, {0, 1}})},
                     named(options, "GL2_3"));
}

GroupPtr psl2_7(const BuildOptions &options) {
  return build_group(7,
                     {Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}),
                      Perm::from_cycles(7, {{1, 2}, {3, 6}})},
                     named(options, "PSL2_7"));
}

GroupPtr matrix_semidirect(std::size_t n, std::size_t k, const GroupPtr &h,
                           const std::vector<IntMatrix> &images,
                           const BuildOptions &options) {
  const GroupPtr base = n == 1 || k == 0 ? cyclic_group(1) : [&] {
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < k; ++i)
      gens.push_back(cycle_perm(n * k, n * i, n));
    return build_group(n * k, gens, BuildOptions{kMaxOrderLimit, "N"});
  }();

  // Exponent vector <-> element index.
  std::map<std::vector<long>, Elem> index;
  std::vector<std::vector<long>> vec(base->order());
  {
    std::vector<long> e(k, 0);
    while (true) {
      Perm p = Perm::identity(base->degree());
      for (std::size_t i = 0; i < k; ++i)
        for (long t = 0; t < e[i]; ++t)
          p = p * base->generators()[i];
      const Elem id = base->require_index(p);
      index[e] = id;
      vec[id] = e;
      std::size_t i = 0;
      while (i < k && ++e[i] == static_cast<long>(n))
        e[i++] = 0;
      if (i == k)
        break;
    }
  }
  std::vector<ElementMap> action;
  for (const IntMatrix &m : images) {
    ElementMap map(base->order());
    for (Elem el = 0; el < base->order(); ++el) {
      std::vector<long> out(k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          out[j] = mod(out[j] + vec[el][i] * m[i][j], static_cast<long>(n));
      map[el] = index.at(out);
    }
    action.push_back(std::move(map));
  }
  BuildOptions opts = options;
  if (opts.name.empty())
    opts.name = "N_rtimes_" + h->name();
  return semidirect_product(base, h, action, opts).group;
}

GroupPtr order75_group(const BuildOptions &options) {
  return matrix_semidirect(5, 2, cyclic_group(3), {{{1, 1}, {2, 3}}},
                           named(options, "C5C5_rtimes_C3"));
}

GroupPtr a5_times_c5(const BuildOptions &options) {
  return direct_product(alternating_group(5), cyclic_group(5), named(options, "A5xC5")).group;
}

std::vector<CorpusEntry> builtin_catalog() {
  std::vector<CorpusEntry> out;
  for (const auto &b : catalog())
    out.push_back({b.name, b.order});
  return out;
}

std::vector<GroupPtr> builtin_corpus(std::size_t max_order) {
  max_order = std::min(max_order, kMaxOrderLimit);
  std::vector<GroupPtr> out;
  for (const auto &b : catalog())
    if (b.order <= max_order)
      out.push_back(b.build(BuildOptions{max_order, b.name}));
  return out;
}

GroupPtr builtin_group(const std::string &name, std::size_t max_order) {
  for (const auto &b : catalog())
    if (b.name == name)
      return b.build(BuildOptions{std::min(max_order, kMaxOrderLimit), b.name});
  throw GroupError(ErrorKind::ParseError, "no built-in group named " + name);
}

std::vector<GroupPtr> load_corpus_dir(const std::filesystem::path &dir, std::size_t max_order) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw GroupError(ErrorKind::ParseError, "not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".grp")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<GroupPtr> out;
  for (const auto &f : files) {
    try {
      out.push_back(load_group_file(f, BuildOptions{std::min(max_order, kMaxOrderLimit), {}}));
    } catch (const GroupError &e) {
      if (e.kind() != ErrorKind::ClosureExceedsBound)
        throw;
    }
  }
  std::vector<GroupPtr> merged;
  merge_corpus(merged, out);
  return merged;
}

void merge_corpus(std::vector<GroupPtr> &base, const std::vector<GroupPtr> &extra) {
  std::set<std::string> names;
  for (const auto &g : base)
    names.insert(g->name());
  for (const auto &g : extra) {
    if (!names.insert(g->name()).second)
      throw GroupError(ErrorKind::ParseError, "duplicate group name " + g->name());
    base.push_back(g);
  }
}

} // namespace pinilot
