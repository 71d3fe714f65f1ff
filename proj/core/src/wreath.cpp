#include "wreathmono/wreath.hpp"

#include <algorithm>

#include "wreathmono/errors.hpp"

namespace wm {

namespace {

void require_shape(const WreathElement& x, const WreathElement& y) {
  if (x.ell() != y.ell() || x.t() != y.t())
    throw InvalidInput("wreath shape mismatch: (" + std::to_string(x.ell()) + "," +
                       std::to_string(x.t()) + ") vs (" + std::to_string(y.ell()) + "," +
                       std::to_string(y.t()) + ")");
}

}  // namespace

WreathElement::WreathElement(std::vector<Perm> base, Perm top)
    : base_(std::move(base)), top_(std::move(top)) {
  if (base_.empty()) throw InvalidInput("wreath element needs t >= 1");
  if (top_.degree() != base_.size()) throw InvalidInput("top degree must equal t");
  for (const auto& a : base_)
    if (a.degree() != base_.front().degree() || a.degree() == 0)
      throw InvalidInput("base permutations must share a positive degree");
}

WreathElement WreathElement::identity(std::size_t ell, std::size_t t) {
  return WreathElement(std::vector<Perm>(t, Perm(ell)), Perm(t));
}

WreathElement WreathElement::from_base(std::vector<Perm> base) {
  std::size_t t = base.size();
  return WreathElement(std::move(base), Perm(t));
}

WreathElement WreathElement::base_at_first(const Perm& a, const Perm& top) {
  std::vector<Perm> base(top.degree(), Perm(a.degree()));
  base[0] = a;
  return WreathElement(std::move(base), top);
}

bool WreathElement::is_identity() const {
  if (!top_.is_identity()) return false;
  return std::all_of(base_.begin(), base_.end(), [](const Perm& a) { return a.is_identity(); });
}

WreathElement WreathElement::inverse() const {
  // (a sigma)^-1 has base c(j) = a(j^{sigma^-1})^-1 and top sigma^-1.
  Perm sinv = top_.inverse();
  std::vector<Perm> base(t());
  for (std::size_t j = 0; j < t(); ++j) base[j] = base_[sinv[static_cast<Point>(j)]].inverse();
  return WreathElement(std::move(base), std::move(sinv));
}

WreathElement WreathElement::operator*(const WreathElement& o) const {
  require_shape(*this, o);
  std::vector<Perm> base(t());
  for (std::size_t i = 0; i < t(); ++i) base[i] = base_[i] * o.base_[top_[static_cast<Point>(i)]];
  return WreathElement(std::move(base), top_ * o.top_);
}

WreathElement wreath_multiply(const WreathElement& x, const WreathElement& y) { return x * y; }

WreathElement conjugate(const WreathElement& x, const WreathElement& z) {
  return z.inverse() * x * z;
}

WreathElement product(const std::vector<WreathElement>& xs) {
  if (xs.empty()) throw InvalidInput("empty product");
  WreathElement r = xs.front();
  for (std::size_t k = 1; k < xs.size(); ++k) r = r * xs[k];
  return r;
}

WreathPoint wreath_act(const WreathElement& w, const WreathPoint& delta) {
  if (delta.size() != w.t()) throw InvalidInput("point has wrong number of coordinates");
  WreathPoint out(w.t());
  for (std::size_t j = 0; j < w.t(); ++j) {
    if (delta[j] >= w.ell()) throw InvalidInput("coordinate out of range");
    out[w.top()[static_cast<Point>(j)]] = w.base(j)[delta[j]];
  }
  return out;
}

std::size_t rank_point(const WreathPoint& delta, std::size_t ell) {
  std::size_t r = 0;
  for (Point d : delta) r = r * ell + d;
  return r;
}

WreathPoint unrank_point(std::size_t r, std::size_t ell, std::size_t t) {
  WreathPoint d(t);
  for (std::size_t j = t; j-- > 0;) {
    d[j] = static_cast<Point>(r % ell);
    r /= ell;
  }
  return d;
}

Perm embed(const WreathElement& w) {
  std::size_t ell = w.ell(), t = w.t();
  std::size_t n = 1;
  for (std::size_t k = 0; k < t; ++k) n *= ell;
  std::vector<std::size_t> weight(t);
  for (std::size_t j = t, acc = 1; j-- > 0; acc *= ell) weight[j] = acc;
  std::vector<Point> img(n);
  WreathPoint delta(t, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t out = 0;
    for (std::size_t j = 0; j < t; ++j) out += weight[w.top()[static_cast<Point>(j)]] * w.base(j)[delta[j]];
    img[r] = static_cast<Point>(out);
    for (std::size_t j = t; j-- > 0;) {
      if (++delta[j] < ell) break;
      delta[j] = 0;
    }
  }
  return Perm(std::move(img));
}

Perm embed_imprimitive(const WreathElement& w) {
  std::size_t ell = w.ell(), t = w.t();
  std::vector<Point> img(ell * t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t d = 0; d < ell; ++d)
      img[i * ell + d] = static_cast<Point>(w.top()[static_cast<Point>(i)] * ell + w.base(i)[static_cast<Point>(d)]);
  return Perm(std::move(img));
}

WreathElement from_imprimitive(const Perm& p, std::size_t ell, std::size_t t) {
  if (p.degree() != ell * t) throw InvalidInput("imprimitive degree mismatch");
  std::vector<Perm> base;
  std::vector<Point> top(t);
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<Point> a(ell);
    std::size_t block = p[static_cast<Point>(i * ell)] / ell;
    for (std::size_t d = 0; d < ell; ++d) {
      Point img = p[static_cast<Point>(i * ell + d)];
      if (img / ell != block) throw InvalidInput("permutation does not preserve the coordinate blocks");
      a[d] = static_cast<Point>(img % ell);
    }
    top[i] = static_cast<Point>(block);
    base.emplace_back(std::move(a));
  }
  return WreathElement(std::move(base), Perm(std::move(top)));
}

Perm orbit_product(const WreathElement& x, Point rep) {
  Perm acc(x.ell());
  Point i = rep;
  do {
    acc *= x.base(i);
    i = x.top()[i];
  } while (i != rep);
  return acc;
}

ReducedForm reduced_form(const WreathElement& x, const std::vector<Point>& reps_in) {
  std::size_t t = x.t(), ell = x.ell();
  auto top_orbits = x.top().cycles(true);  // ordered by smallest element
  std::vector<Point> reps = reps_in;
  if (reps.empty()) {
    for (const auto& c : top_orbits) reps.push_back(c.front());
  } else {
    if (reps.size() != top_orbits.size()) throw InvalidInput("need one representative per top orbit");
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (std::find(top_orbits[k].begin(), top_orbits[k].end(), reps[k]) == top_orbits[k].end())
        throw InvalidInput("representative not in its top orbit");
  }
  Perm sinv = x.top().inverse();
  std::vector<Perm> z(t, Perm(ell));
  std::vector<Perm> ybase(t, Perm(ell));
  for (Point rep : reps) {
    // walk rep, rep^{sigma^-1}, ... with z(j) = a(j) z(j^sigma)
    Point prev = rep;
    for (Point j = sinv[rep]; j != rep; j = sinv[j]) {
      z[j] = x.base(j) * z[prev];
      prev = j;
    }
    ybase[rep] = orbit_product(x, rep);
  }
  WreathElement zz = WreathElement::from_base(std::move(z));
  WreathElement y(std::move(ybase), x.top());
  return {std::move(y), std::move(zz), std::move(reps)};
}

// ---------------------------------------------------------------------------

Perm swap_top() { return Perm::from_cycles(2, {{0, 1}}); }

std::string ClassDescriptor::str() const {
  if (swap && first.is_identity()) return "s";
  return "(" + first.str() + "," + second.str() + ")" + (swap ? "s" : "");
}

ClassDescriptor ClassDescriptor::parse(std::string_view text, unsigned ell) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "s") {
    if (ell == 0) throw InvalidInput("bare 's' needs the degree");
    return {CycleType::identity(ell), CycleType::identity(ell), true};
  }
  bool swap = false;
  if (!text.empty() && text.back() == 's') {
    swap = true;
    text.remove_suffix(1);
    text = trim(text);
  }
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw InvalidInput("descriptor must look like ([..],[..]) or ([..],[..])s");
  text = text.substr(1, text.size() - 2);
  auto close = text.find(']');
  if (close == std::string_view::npos) throw InvalidInput("descriptor is missing a partition");
  std::string_view a = trim(text.substr(0, close + 1));
  std::string_view rest = trim(text.substr(close + 1));
  if (rest.empty() || rest.front() != ',') throw InvalidInput("descriptor needs two entries");
  std::string_view b = trim(rest.substr(1));
  CycleType A = CycleType::parse(a);
  unsigned n = ell ? ell : A.degree();
  CycleType B = (b == "1") ? CycleType::identity(n) : CycleType::parse(b);
  if (A.degree() != n || B.degree() != n)
    throw InvalidInput("descriptor partitions must both sum to " + std::to_string(n));
  if (swap && !B.is_identity())
    throw InvalidInput("swap descriptors carry [1^ell] in the second slot");
  return {std::move(A), std::move(B), swap};
}

ClassDescriptor class_descriptor(const WreathElement& x) {
  if (x.t() != 2) throw InvalidInput("class descriptors are defined for t = 2");
  if (x.top().is_identity()) {
    CycleType a = cycle_type(x.base(0)), b = cycle_type(x.base(1));
    if (a < b) std::swap(a, b);
    return {std::move(a), std::move(b), false};
  }
  auto n = static_cast<unsigned>(x.ell());
  return {cycle_type(x.base(0) * x.base(1)), CycleType::identity(n), true};
}

WreathElement from_class(const ClassDescriptor& d) {
  if (d.swap) return WreathElement({canonical_perm(d.first), Perm(d.ell())}, swap_top());
  return WreathElement({canonical_perm(d.first), canonical_perm(d.second)}, Perm(2));
}

}  // namespace wm
