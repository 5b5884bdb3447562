#include "pinilot/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace pinilot {

namespace {

struct Discovery {
  std::size_t parent;    // BFS index of the element this one was reached from
  std::size_t generator; // which generator was applied
};

} // namespace

GroupPtr build_group(std::size_t degree, const std::vector<Perm> &generators,
                     const BuildOptions &options) {
  if (options.max_order > kMaxOrderLimit) {
    throw GroupError(ErrorKind::ClosureExceedsBound,
                     "max_order " + std::to_string(options.max_order) +
                         " exceeds the hard limit " +
                         std::to_string(kMaxOrderLimit));
  }
  for (const Perm &g : generators) {
    if (g.degree() != degree) {
      throw GroupError(ErrorKind::MalformedPermutation,
                       "generator " + g.to_cycle_string() + " has degree " +
                           std::to_string(g.degree()) + ", expected " +
                           std::to_string(degree));
    }
  }

  // Breadth-first closure under right multiplication by the generators.
  std::vector<Perm> found{Perm::identity(degree)};
  std::vector<Discovery> how{{0, 0}};
  std::unordered_map<Perm, std::size_t, PermHash> seen{{found[0], 0}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Perm next = found[head] * generators[s];
      if (seen.contains(next))
        continue;
      if (found.size() + 1 > options.max_order) {
        throw GroupError(ErrorKind::ClosureExceedsBound,
                         "closure exceeds max_order " +
                             std::to_string(options.max_order));
      }
      seen.emplace(next, found.size());
      found.push_back(std::move(next));
      how.push_back({head, s});
    }
  }

  const std::size_t n = found.size();
  std::vector<std::size_t> sorted(n);
  for (std::size_t i = 0; i < n; ++i)
    sorted[i] = i;
  std::sort(sorted.begin(), sorted.end(),
            [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  std::vector<Elem> canon(n); // BFS index -> canonical index
  for (std::size_t c = 0; c < n; ++c)
    canon[sorted[c]] = static_cast<Elem>(c);

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->name_ = options.name;
  group->degree_ = degree;
  group->generators_ = generators;
  group->elements_.reserve(n);
  for (std::size_t c = 0; c < n; ++c)
    group->elements_.push_back(found[sorted[c]]);
  for (const Perm &g : generators)
    group->generator_indices_.push_back(canon[seen.at(g)]);

  // right_by[s][x] = x * generators[s]
  std::vector<std::vector<Elem>> right_by(generators.size(),
                                          std::vector<Elem>(n));
  for (std::size_t s = 0; s < generators.size(); ++s)
    for (std::size_t c = 0; c < n; ++c)
      right_by[s][c] =
          canon[seen.at(group->elements_[c] * generators[s])];

  // Row i of the table follows the BFS tree: i * y = (i * parent(y)) * s.
  auto &table = group->table_;
  table.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Elem *row = table.data() + i * n;
    row[canon[0]] = static_cast<Elem>(i);
    for (std::size_t b = 1; b < n; ++b) {
      const Discovery &d = how[b];
      row[canon[b]] = right_by[d.generator][row[canon[d.parent]]];
    }
  }

  group->inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Elem *row = table.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == 0) {
        group->inverse_[i] = static_cast<Elem>(j);
        break;
      }
    }
  }

  group->orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 1;
    for (Elem x = static_cast<Elem>(i); x != 0; x = group->mul(x, static_cast<Elem>(i)))
      ++k;
    group->orders_[i] = k;
  }
  return group;
}

std::optional<Elem> FiniteGroup::index_of(const Perm &p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p)
    return std::nullopt;
  return static_cast<Elem>(it - elements_.begin());
}

Elem FiniteGroup::require_index(const Perm &p) const {
  if (auto e = index_of(p))
    return *e;
  throw GroupError(ErrorKind::NotAnElement,
                   p.to_cycle_string() + " is not an element of the group");
}

Elem FiniteGroup::power(Elem a, std::size_t k) const noexcept {
  Elem result = identity();
  Elem base = a;
  while (k) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a : generator_indices_)
    for (Elem b : generator_indices_)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

Subgroup::Subgroup(GroupPtr parent, ElementSet elements,
                   std::vector<Elem> generators)
    : parent_(std::move(parent)), elements_(elements),
      generators_(std::move(generators)), order_(elements_.size()) {}

Subgroup Subgroup::whole(const GroupPtr &g) {
  std::vector<Elem> gens;
  for (Elem e : g->generator_indices())
    if (e != FiniteGroup::identity() &&
        std::find(gens.begin(), gens.end(), e) == gens.end())
      gens.push_back(e);
  return Subgroup(g, g->all_elements(), std::move(gens));
}

Subgroup Subgroup::trivial(const GroupPtr &g) {
  ElementSet s;
  s.insert(FiniteGroup::identity());
  return Subgroup(g, s, {});
}

Subgroup Subgroup::from_closed_set(const GroupPtr &g,
                                   const ElementSet &elements) {
  ElementSet current;
  current.insert(FiniteGroup::identity());
  std::vector<Elem> gens;
  const std::size_t target = elements.size();
  std::size_t have = 1;
  elements.for_each([&](Elem e) {
    if (have == target || current.contains(e))
      return;
    current = close_with(*g, current, gens, e);
    gens.push_back(e);
    have = current.size();
  });
  return Subgroup(g, current, std::move(gens));
}

bool Subgroup::is_subgroup_of(const Subgroup &other) const {
  return parent_ == other.parent_ && elements_.is_subset_of(other.elements_);
}

void require_same_parent(const Subgroup &a, const Subgroup &b) {
  if (a.parent() != b.parent())
    throw GroupError(ErrorKind::WrongParent,
                     "subgroups belong to different groups");
}

ElementSet close_with(const FiniteGroup &g, const ElementSet &base_set,
                      std::span<const Elem> base_generators, Elem extra) {
  if (base_set.contains(extra))
    return base_set;
  const std::vector<Elem> base = base_set.to_vector();
  std::vector<Elem> gens(base_generators.begin(), base_generators.end());
  gens.push_back(extra);

  // Invariant: result is a union of right cosets base * r over reps.
  ElementSet result = base_set;
  std::vector<Elem> reps{FiniteGroup::identity()};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Elem s : gens) {
      const Elem y = g.mul(reps[i], s);
      if (result.contains(y))
        continue;
      for (Elem h : base)
        result.insert(g.mul(h, y));
      reps.push_back(y);
    }
  }
  return result;
}

namespace {

Subgroup generated_by(const GroupPtr &g, std::span<const Elem> seeds) {
  ElementSet current;
  current.insert(FiniteGroup::identity());
  std::vector<Elem> gens;
  for (Elem e : seeds) {
    if (current.contains(e))
      continue;
    current = close_with(*g, current, gens, e);
    gens.push_back(e);
  }
  return Subgroup(g, current, std::move(gens));
}

} // namespace

DirectProduct direct_product(const GroupPtr &a, const GroupPtr &b,
                             const BuildOptions &options) {
  if (a->order() * b->order() > options.max_order) {
    throw GroupError(ErrorKind::ClosureExceedsBound,
                     "direct product order " +
                         std::to_string(a->order() * b->order()) +
                         " exceeds max_order " +
                         std::to_string(options.max_order));
  }
  const std::size_t degree = a->degree() + b->degree();
  std::vector<Perm> gens;
  for (const Perm &p : a->generators())
    gens.push_back(p.shifted(0, degree));
  const std::size_t split = gens.size();
  for (const Perm &p : b->generators())
    gens.push_back(p.shifted(a->degree(), degree));

  BuildOptions opts = options;
  if (opts.name.empty())
    opts.name = a->name() + "x" + b->name();
  GroupPtr g = build_group(degree, gens, opts);

  std::vector<Elem> first_seeds(g->generator_indices().begin(),
                                g->generator_indices().begin() +
                                    static_cast<std::ptrdiff_t>(split));
  std::vector<Elem> second_seeds(g->generator_indices().begin() +
                                     static_cast<std::ptrdiff_t>(split),
                                 g->generator_indices().end());
  return {g, generated_by(g, first_seeds), generated_by(g, second_seeds)};
}

SemidirectProduct semidirect_product(const GroupPtr &n, const GroupPtr &h,
                                     const std::vector<ElementMap> &action,
                                     const BuildOptions &options) {
  const std::size_t nn = n->order();
  const std::size_t hn = h->order();
  if (action.size() != h->generators().size()) {
    throw GroupError(ErrorKind::NotAHomomorphism,
                     "expected one automorphism per generator of H");
  }
  for (const ElementMap &phi : action) {
    if (phi.size() != nn)
      throw GroupError(ErrorKind::NotAnAutomorphism, "map has wrong length");
    std::vector<bool> hit(nn, false);
    for (Elem y : phi) {
      if (y >= nn || hit[y])
        throw GroupError(ErrorKind::NotAnAutomorphism, "map is not bijective");
      hit[y] = true;
    }
    for (std::size_t x = 0; x < nn; ++x)
      for (std::size_t y = 0; y < nn; ++y)
        if (phi[n->mul(static_cast<Elem>(x), static_cast<Elem>(y))] !=
            n->mul(phi[x], phi[y]))
          throw GroupError(ErrorKind::NotAnAutomorphism,
                           "map does not respect products");
  }
  if (nn * hn > options.max_order) {
    throw GroupError(ErrorKind::ClosureExceedsBound,
                     "semidirect product order " + std::to_string(nn * hn) +
                         " exceeds max_order " +
                         std::to_string(options.max_order));
  }

  // Pair each generator of H with its automorphism, acting on H's points and
  // on N's element indices side by side. The pairs generate the graph of a
  // homomorphism exactly when the closure has |H| elements.
  const std::size_t hd = h->degree();
  std::vector<Perm> paired;
  for (std::size_t i = 0; i < action.size(); ++i) {
    std::vector<Point> img(hd + nn);
    const Perm &hg = h->generators()[i];
    for (std::size_t p = 0; p < hd; ++p)
      img[p] = hg[p];
    for (std::size_t x = 0; x < nn; ++x)
      img[hd + x] = static_cast<Point>(hd + action[i][x]);
    paired.emplace_back(std::move(img));
  }
  GroupPtr graph;
  try {
    graph = build_group(hd + nn, paired, BuildOptions{hn, ""});
  } catch (const GroupError &e) {
    if (e.kind() != ErrorKind::ClosureExceedsBound)
      throw;
    throw GroupError(ErrorKind::NotAHomomorphism,
                     "generator images do not define a homomorphism H -> Aut(N)");
  }
  if (graph->order() != hn) {
    throw GroupError(ErrorKind::NotAHomomorphism,
                     "generator images do not define a homomorphism H -> Aut(N)");
  }
  std::vector<ElementMap> phi(hn, ElementMap(nn));
  for (const Perm &pair : graph->elements()) {
    std::vector<Point> hpart(pair.images().begin(),
                             pair.images().begin() + static_cast<std::ptrdiff_t>(hd));
    const Elem hi = h->require_index(Perm(std::move(hpart)));
    for (std::size_t x = 0; x < nn; ++x)
      phi[hi][x] = static_cast<Elem>(pair[hd + x] - hd);
  }

  // Regular action of (h, n) on point h * |N| + n by right multiplication.
  const std::size_t degree = nn * hn;
  auto point = [nn](std::size_t hi, std::size_t ni) {
    return static_cast<Point>(hi * nn + ni);
  };
  std::vector<Perm> gens;
  for (Elem hs : h->generator_indices()) {
    std::vector<Point> img(degree);
    for (std::size_t hi = 0; hi < hn; ++hi)
      for (std::size_t ni = 0; ni < nn; ++ni)
        img[point(hi, ni)] = point(h->mul(static_cast<Elem>(hi), hs), phi[hs][ni]);
    gens.emplace_back(std::move(img));
  }
  const std::size_t split = gens.size();
  for (Elem ns : n->generator_indices()) {
    std::vector<Point> img(degree);
    for (std::size_t hi = 0; hi < hn; ++hi)
      for (std::size_t ni = 0; ni < nn; ++ni)
        img[point(hi, ni)] = point(hi, n->mul(static_cast<Elem>(ni), ns));
    gens.emplace_back(std::move(img));
  }

  BuildOptions opts = options;
  if (opts.name.empty())
    opts.name = n->name() + ":" + h->name();
  GroupPtr g = build_group(degree, gens, opts);
  std::vector<Elem> h_seeds(g->generator_indices().begin(),
                            g->generator_indices().begin() +
                                static_cast<std::ptrdiff_t>(split));
  std::vector<Elem> n_seeds(g->generator_indices().begin() +
                                static_cast<std::ptrdiff_t>(split),
                            g->generator_indices().end());
  return {g, generated_by(g, n_seeds), generated_by(g, h_seeds)};
}

} // namespace pinilot
