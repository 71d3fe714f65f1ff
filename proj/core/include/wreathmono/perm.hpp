#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wm {

using Point = std::uint32_t;

// Permutation of {0..n-1}. Products are read left to right: (p*q)(i) = q(p(i)),
// so (1,2)*(1,3) = (1,2,3).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t n);
  explicit Perm(std::vector<Point> images);

  // 0-based cycles; points not mentioned are fixed.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);
  static Perm transposition(std::size_t n, Point a, Point b);

  std::size_t degree() const { return img_.size(); }
  Point operator[](Point i) const { return img_[i]; }
  const std::vector<Point>& images() const { return img_; }

  Perm inverse() const;
  Perm pow(long long k) const;
  bool is_identity() const;
  int sign() const;  // +1 or -1
  std::size_t num_cycles() const;
  std::uint64_t order() const;
  Point first_moved() const;  // degree() when identity

  // Cycles of length >= 2 (or all cycles when include_fixed), each starting
  // at its smallest point, sorted by that point.
  std::vector<std::vector<Point>> cycles(bool include_fixed = false) const;

  Perm operator*(const Perm& q) const;
  Perm& operator*=(const Perm& q);

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> img_;
};

Perm compose(const Perm& p, const Perm& q);
// x^y = y^-1 x y
Perm conjugate(const Perm& x, const Perm& y);
Perm commutator(const Perm& x, const Perm& y);  // x^-1 y^-1 x y

// Partition of the degree, parts sorted descending.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<unsigned> parts);
  static CycleType identity(unsigned n);
  static CycleType parse(std::string_view text);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned degree() const;
  std::size_t size() const { return parts_.size(); }
  std::size_t count(unsigned k) const;
  std::map<unsigned, unsigned> multiplicities() const;
  bool is_identity() const;
  int sign() const;
  // "[2^3,1^2]"
  std::string str() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend std::strong_ordering operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<unsigned> parts_;
};

CycleType cycle_type(const Perm& p);

// Canonical element of a cycle type: cycles filled on consecutive points,
// longest first.
Perm canonical_perm(const CycleType& t);

// Text forms (1-based): "[3,1,2]" images or "(1,2,3)(4,5)" cycles.
std::string to_cycle_string(const Perm& p);
std::string to_image_string(const Perm& p);
// degree 0 means infer it (images: list length; cycles: largest point).
Perm parse_perm(std::string_view text, std::size_t degree = 0);

}  // namespace wm
