#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wreathmono/perm.hpp"

namespace wm {

// Element a*sigma of S_ell wr S_t. Base a = (a(0..t-1)), top sigma on I.
// The element first applies a(i) in coordinate i, then moves coordinate i to
// position i^sigma:
//   delta^{a sigma}(i) = delta(i^{sigma^-1})^{a(i^{sigma^-1})}.
// Products: (a sigma)(b tau) = (i -> a(i) * b(i^sigma)) (sigma tau).
class WreathElement {
 public:
  WreathElement() = default;
  WreathElement(std::vector<Perm> base, Perm top);
  static WreathElement identity(std::size_t ell, std::size_t t);
  // Element with the given base and trivial top.
  static WreathElement from_base(std::vector<Perm> base);
  // (a, 1, ..., 1) top
  static WreathElement base_at_first(const Perm& a, const Perm& top);

  std::size_t ell() const { return base_.empty() ? 0 : base_.front().degree(); }
  std::size_t t() const { return base_.size(); }
  const std::vector<Perm>& base() const { return base_; }
  const Perm& base(std::size_t i) const { return base_[i]; }
  const Perm& top() const { return top_; }

  bool is_identity() const;
  bool in_base_group() const { return top_.is_identity(); }
  WreathElement inverse() const;
  WreathElement operator*(const WreathElement& o) const;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
  friend auto operator<=>(const WreathElement&, const WreathElement&) = default;

 private:
  std::vector<Perm> base_;
  Perm top_;
};

WreathElement wreath_multiply(const WreathElement& x, const WreathElement& y);
// z^-1 x z
WreathElement conjugate(const WreathElement& x, const WreathElement& z);
WreathElement product(const std::vector<WreathElement>& xs);

using WreathPoint = std::vector<Point>;
WreathPoint wreath_act(const WreathElement& w, const WreathPoint& delta);

// Product action on ell^t points; coordinate 0 is the most significant digit.
std::size_t rank_point(const WreathPoint& delta, std::size_t ell);
WreathPoint unrank_point(std::size_t r, std::size_t ell, std::size_t t);
Perm embed(const WreathElement& w);
// Faithful imprimitive action on t*ell points: (i, d) -> i*ell + d.
Perm embed_imprimitive(const WreathElement& w);
WreathElement from_imprimitive(const Perm& p, std::size_t ell, std::size_t t);

// Reduced form: y = x^z with y's base trivial except at one
// representative per top orbit, where it equals the product of the base
// along the orbit. reps[k] is the representative chosen for the k-th orbit
// (orbits ordered by smallest element); default is the smallest element.
struct ReducedForm {
  WreathElement y;
  WreathElement z;  // trivial top
  std::vector<Point> reps;
};
ReducedForm reduced_form(const WreathElement& x, const std::vector<Point>& reps = {});
// Orbit products b(iota) = a(iota) a(iota^sigma) ... for the given rep.
Perm orbit_product(const WreathElement& x, Point rep);

// t = 2 class descriptor: (A1, A2) or (A1, [1^ell]) s.
struct ClassDescriptor {
  CycleType first;
  CycleType second;
  bool swap = false;

  unsigned ell() const { return first.degree(); }
  // "([9],[1^9])s"; a bare swap prints as "s".
  std::string str() const;
  static ClassDescriptor parse(std::string_view text, unsigned ell = 0);
  friend bool operator==(const ClassDescriptor&, const ClassDescriptor&) = default;
  friend auto operator<=>(const ClassDescriptor&, const ClassDescriptor&) = default;
};

ClassDescriptor class_descriptor(const WreathElement& x);
WreathElement from_class(const ClassDescriptor& d);

// Swap s in S_2 (or any transposition of I for t > 2).
Perm swap_top();

}  // namespace wm
