#pragma once

#include <algorithm>
#include <numeric>

namespace wm {

template <class Rng>
Perm random_perm(std::size_t n, Rng& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

template <class Rng>
Perm random_of_type(const CycleType& t, Rng& rng) {
  return conjugate(canonical_perm(t), random_perm(t.degree(), rng));
}

}  // namespace wm
