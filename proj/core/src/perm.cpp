#include "wreathmono/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "wreathmono/errors.hpp"

namespace wm {

namespace {

void require_same_degree(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw InvalidInput("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                       std::to_string(q.degree()));
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

// Small hand-rolled tokenizer for "(1,2)(3,4)" / "[2,1^3]" style input.
struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n')) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  unsigned number() {
    skip_ws();
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc() || ptr == s.data() + i)
      throw InvalidInput("expected a number at position " + std::to_string(i) + " in '" +
                         std::string(s) + "'");
    i = static_cast<std::size_t>(ptr - s.data());
    return v;
  }
};

}  // namespace

Perm::Perm(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), Point{0}); }

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (Point x : img_) {
    if (x >= img_.size() || seen[x]) throw InvalidInput("image list is not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  Perm p(n);
  std::vector<char> used(n, 0);
  for (const auto& c : cycles) {
    for (Point x : c) {
      if (x >= n) throw InvalidInput("cycle point out of range");
      if (used[x]) throw InvalidInput("cycles are not disjoint");
      used[x] = 1;
    }
    for (std::size_t k = 0; k < c.size(); ++k) p.img_[c[k]] = c[(k + 1) % c.size()];
  }
  return p;
}

Perm Perm::transposition(std::size_t n, Point a, Point b) {
  return from_cycles(n, {{a, b}});
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Perm result(degree());
  while (e) {
    if (e & 1) result *= base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::size_t Perm::num_cycles() const {
  std::vector<char> seen(img_.size(), 0);
  std::size_t c = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (Point j = static_cast<Point>(i); !seen[j]; j = img_[j]) seen[j] = 1;
  }
  return c;
}

int Perm::sign() const { return ((img_.size() - num_cycles()) % 2 == 0) ? 1 : -1; }

std::uint64_t Perm::order() const {
  std::uint64_t o = 1;
  CycleType ct = cycle_type(*this);
  for (unsigned k : ct.parts()) o = lcm_u64(o, k);
  return o;
}

Point Perm::first_moved() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(img_.size());
}

std::vector<std::vector<Point>> Perm::cycles(bool include_fixed) const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<Point> c;
    for (Point j = static_cast<Point>(i); !seen[j]; j = img_[j]) {
      seen[j] = 1;
      c.push_back(j);
    }
    if (c.size() > 1 || include_fixed) out.push_back(std::move(c));
  }
  return out;
}

Perm Perm::operator*(const Perm& q) const {
  require_same_degree(*this, q);
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = q.img_[img_[i]];
  return r;
}

Perm& Perm::operator*=(const Perm& q) {
  require_same_degree(*this, q);
  for (auto& x : img_) x = q.img_[x];
  return *this;
}

Perm compose(const Perm& p, const Perm& q) { return p * q; }

Perm conjugate(const Perm& x, const Perm& y) {
  require_same_degree(x, y);
  // y^-1 x y maps y(i) -> y(x(i))
  std::vector<Point> img(x.degree());
  for (std::size_t i = 0; i < x.degree(); ++i) img[y[static_cast<Point>(i)]] = y[x[static_cast<Point>(i)]];
  return Perm(std::move(img));
}

Perm commutator(const Perm& x, const Perm& y) { return x.inverse() * y.inverse() * x * y; }

// ---------------------------------------------------------------------------

CycleType::CycleType(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned k : parts_)
    if (k == 0) throw InvalidInput("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

CycleType CycleType::identity(unsigned n) { return CycleType(std::vector<unsigned>(n, 1)); }

unsigned CycleType::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

std::size_t CycleType::count(unsigned k) const {
  return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), k));
}

std::map<unsigned, unsigned> CycleType::multiplicities() const {
  std::map<unsigned, unsigned> m;
  for (unsigned k : parts_) ++m[k];
  return m;
}

bool CycleType::is_identity() const {
  return std::all_of(parts_.begin(), parts_.end(), [](unsigned k) { return k == 1; });
}

int CycleType::sign() const {
  unsigned even = 0;
  for (unsigned k : parts_) even += (k % 2 == 0);
  return even % 2 == 0 ? 1 : -1;
}

std::string CycleType::str() const {
  std::string out = "[";
  bool first = true;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!first) out += ',';
    first = false;
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + "]";
}

CycleType CycleType::parse(std::string_view text) {
  Cursor c{text};
  if (!c.eat('[')) throw InvalidInput("partition must start with '[': " + std::string(text));
  std::vector<unsigned> parts;
  if (!c.eat(']')) {
    do {
      unsigned k = c.number();
      unsigned m = 1;
      if (c.eat('^')) m = c.number();
      parts.insert(parts.end(), m, k);
    } while (c.eat(','));
    if (!c.eat(']')) throw InvalidInput("partition must end with ']': " + std::string(text));
  }
  if (!c.done()) throw InvalidInput("trailing characters in partition: " + std::string(text));
  return CycleType(std::move(parts));
}

CycleType cycle_type(const Perm& p) {
  std::vector<unsigned> parts;
  for (const auto& c : p.cycles(true)) parts.push_back(static_cast<unsigned>(c.size()));
  return CycleType(std::move(parts));
}

Perm canonical_perm(const CycleType& t) {
  std::vector<std::vector<Point>> cycles;
  Point next = 0;
  for (unsigned k : t.parts()) {
    std::vector<Point> c(k);
    std::iota(c.begin(), c.end(), next);
    next += k;
    cycles.push_back(std::move(c));
  }
  return Perm::from_cycles(t.degree(), cycles);
}

std::string to_cycle_string(const Perm& p) {
  auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out;
}

std::string to_image_string(const Perm& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[static_cast<Point>(i)] + 1);
  }
  return out + "]";
}

Perm parse_perm(std::string_view text, std::size_t degree) {
  Cursor c{text};
  c.skip_ws();
  if (c.eat('[')) {
    std::vector<Point> img;
    if (!c.eat(']')) {
      do {
        unsigned v = c.number();
        if (v == 0) throw InvalidInput("image lists are 1-based");
        img.push_back(v - 1);
      } while (c.eat(','));
      if (!c.eat(']')) throw InvalidInput("unterminated image list: " + std::string(text));
    }
    if (!c.done()) throw InvalidInput("trailing characters in permutation: " + std::string(text));
    if (degree != 0 && img.size() != degree)
      throw InvalidInput("image list has length " + std::to_string(img.size()) + ", expected " +
                         std::to_string(degree));
    return Perm(std::move(img));
  }
  std::vector<std::vector<Point>> cycles;
  Point maxp = 0;
  while (c.eat('(')) {
    std::vector<Point> cyc;
    if (!c.eat(')')) {
      do {
        unsigned v = c.number();
        if (v == 0) throw InvalidInput("cycle points are 1-based");
        cyc.push_back(v - 1);
        maxp = std::max<Point>(maxp, v);
      } while (c.eat(','));
      if (!c.eat(')')) throw InvalidInput("unterminated cycle: " + std::string(text));
    }
    cycles.push_back(std::move(cyc));
  }
  if (!c.done()) throw InvalidInput("cannot parse permutation: " + std::string(text));
  if (degree == 0) degree = maxp;
  if (maxp > degree) throw InvalidInput("cycle point exceeds degree");
  return Perm::from_cycles(degree, cycles);
}

}  // namespace wm
