#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pinilot {

using Point = std::uint16_t;

// A permutation of {0..degree-1}. Products act on the right:
// (a * b) maps i to b(a(i)), so a is applied first.
class Perm {
public:
  Perm() = default;

  // Throws MalformedPermutation unless images is a bijection on 0..n-1.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  // 0-indexed disjoint-or-not cycles, composed left to right.
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<Point>> cycles);
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;

  // Same permutation on a larger domain, fixing the new points.
  Perm extended(std::size_t degree) const;
  // Shift the support by offset inside a domain of the given degree.
  Perm shifted(std::size_t offset, std::size_t degree) const;

  // Disjoint cycle decomposition, fixed points omitted.
  std::vector<std::vector<Point>> cycles() const;
  // "(0 1 2)(3 4)" with the given index base; "()" for the identity.
  std::string to_cycle_string(int base = 0) const;

  friend Perm operator*(const Perm &a, const Perm &b);
  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &a, const Perm &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm &p) const noexcept;
};

} // namespace pinilot
