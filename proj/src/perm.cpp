#include "pinilot/perm.hpp"

#include <sstream>

#include "pinilot/errors.hpp"

namespace pinilot {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::ClosureExceedsBound: return "ClosureExceedsBound";
  case ErrorKind::MalformedPermutation: return "MalformedPermutation";
  case ErrorKind::NotAnElement: return "NotAnElement";
  case ErrorKind::NotNormal: return "NotNormal";
  case ErrorKind::WrongParent: return "WrongParent";
  case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
  case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
  case ErrorKind::LatticeBudgetExceeded: return "LatticeBudgetExceeded";
  case ErrorKind::JoinPredicateFailure: return "JoinPredicateFailure";
  case ErrorKind::BadPrime: return "BadPrime";
  case ErrorKind::BadCondition: return "BadCondition";
  case ErrorKind::UnknownCorollary: return "UnknownCorollary";
  case ErrorKind::UnknownLemma: return "UnknownLemma";
  case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Point p = images_[i];
    if (p >= images_.size() || seen[p]) {
      throw GroupError(ErrorKind::MalformedPermutation,
                       "image list is not a bijection (position " +
                           std::to_string(i) + ")");
    }
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i)
    p.images_[i] = static_cast<Point>(i);
  return p;
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>> &cycles) {
  Perm result = identity(degree);
  for (const auto &cycle : cycles) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i)
      images[i] = static_cast<Point>(i);
    std::vector<bool> used(degree, false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Point from = cycle[k];
      if (from >= degree || used[from]) {
        throw GroupError(ErrorKind::MalformedPermutation,
                         "cycle point out of range or repeated");
      }
      used[from] = true;
      images[from] = cycle[(k + 1) % cycle.size()];
    }
    result = result * Perm(std::move(images));
  }
  return result;
}

Perm Perm::from_cycles(
    std::size_t degree,
    std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> cs;
  for (const auto &c : cycles)
    cs.emplace_back(c);
  return from_cycles(degree, cs);
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const {
  Perm p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[images_[i]] = static_cast<Point>(i);
  return p;
}

Perm Perm::extended(std::size_t degree) const { return shifted(0, degree); }

Perm Perm::shifted(std::size_t offset, std::size_t degree) const {
  if (offset + images_.size() > degree)
    throw GroupError(ErrorKind::MalformedPermutation, "shift past degree");
  Perm p = identity(degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  return p;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    for (std::size_t i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      cycle.push_back(static_cast<Point>(i));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Perm::to_cycle_string(int base) const {
  const auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (const auto &c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k)
      os << (k ? " " : "") << (static_cast<int>(c[k]) + base);
    os << ')';
  }
  return os.str();
}

Perm operator*(const Perm &a, const Perm &b) {
  Perm p;
  p.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i)
    p.images_[i] = b.images_[a.images_[i]];
  return p;
}

std::size_t PermHash::operator()(const Perm &p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

} // namespace pinilot
