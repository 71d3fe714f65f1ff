#include "wreathmono/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "wreathmono/errors.hpp"

namespace wm {

namespace {

BigInt class_size(const CycleType& t) {
  BigInt denom = 1;
  for (const auto& [k, m] : t.multiplicities()) {
    for (unsigned i = 0; i < m; ++i) denom *= k;
    denom *= factorial(m);
  }
  return factorial(t.degree()) / denom;
}

void gen_members(std::vector<Point>& img, std::vector<char>& used, std::map<unsigned, unsigned>& remaining,
                 std::vector<Perm>& out) {
  std::size_t n = img.size();
  Point p = 0;
  while (p < n && used[p]) ++p;
  if (p == n) {
    out.emplace_back(img);
    return;
  }
  for (auto& [len, cnt] : remaining) {
    if (cnt == 0) continue;
    --cnt;
    used[p] = 1;
    // choose the remaining len-1 points of the cycle through p, in order
    std::vector<Point> cyc{p};
    std::function<void()> extend = [&]() {
      if (cyc.size() == len) {
        for (std::size_t k = 0; k < len; ++k) img[cyc[k]] = cyc[(k + 1) % len];
        gen_members(img, used, remaining, out);
        return;
      }
      for (Point q = p + 1; q < n; ++q) {
        if (used[q]) continue;
        used[q] = 1;
        cyc.push_back(q);
        extend();
        cyc.pop_back();
        used[q] = 0;
      }
    };
    extend();
    used[p] = 0;
    img[p] = p;
    ++cnt;
  }
}

struct Worker {
  const SearchQuery& q;
  const std::vector<std::vector<Perm>>& members;  // per position 1..r-2
  const Perm& x1;
  std::size_t n;
  std::uint64_t nodes = 0, candidates = 0;
  std::vector<std::vector<Perm>> found;
  std::set<std::vector<Perm>> seen;
  bool stop = false;

  Worker(const SearchQuery& q_, const std::vector<std::vector<Perm>>& m, const Perm& x, std::size_t n_)
      : q(q_), members(m), x1(x), n(n_) {}

  void accept(std::vector<Perm> tuple) {
    ++candidates;
    if ((q.require_transitive || q.require_primitive || q.dedupe) && !is_transitive(n, tuple)) return;
    if (q.require_primitive && !is_primitive(n, tuple).primitive) return;
    if (q.order_target) {
      PermGroup g(n, tuple);
      if (g.order() != *q.order_target) return;
    }
    if (q.dedupe && !seen.insert(canonical_tuple_form(tuple)).second) return;
    found.push_back(std::move(tuple));
    if (q.limit && found.size() >= q.limit) stop = true;
  }

  void dfs(std::vector<Perm>& prefix, const Perm& prod) {
    if (stop) return;
    std::size_t r = q.classes.size();
    if (prefix.size() == r - 1) {
      Perm last = prod.inverse();
      if (cycle_type(last) != q.classes.back()) return;
      auto tuple = prefix;
      tuple.push_back(std::move(last));
      accept(std::move(tuple));
      return;
    }
    for (const auto& x : members[prefix.size() - 2]) {
      ++nodes;
      prefix.push_back(x);
      dfs(prefix, prod * x);
      prefix.pop_back();
      if (stop) return;
    }
  }

  void run_branch(const Perm& x2) {
    ++nodes;
    std::vector<Perm> prefix{x1, x2};
    dfs(prefix, x1 * x2);
  }
};

}  // namespace

bool parity_feasible(const std::vector<CycleType>& classes) {
  int s = 1;
  for (const auto& c : classes) s *= c.sign();
  return s == 1;
}

std::vector<Perm> class_members(const CycleType& t, std::size_t max_size) {
  if (class_size(t) > max_size)
    throw InvalidInput("class " + t.str() + " has more than " + std::to_string(max_size) + " elements");
  std::size_t n = t.degree();
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = i;
  std::vector<char> used(n, 0);
  auto rem = t.multiplicities();
  std::vector<Perm> out;
  gen_members(img, used, rem, out);
  std::sort(out.begin(), out.end());
  return out;
}

SearchResult find_tuples(const SearchQuery& q) {
  std::size_t r = q.classes.size();
  if (r < 2) throw InvalidInput("need at least two classes");
  if (q.degree > q.cap) throw InvalidInput("degree " + std::to_string(q.degree) + " exceeds the search cap " + std::to_string(q.cap));
  for (const auto& c : q.classes)
    if (c.degree() != q.degree) throw InvalidInput("class " + c.str() + " does not have degree " + std::to_string(q.degree));
  if (!parity_feasible(q.classes)) throw InvalidInput("sign product of the classes is -1; no product-1 tuple exists");

  Perm x1 = canonical_perm(q.classes.front());
  SearchResult res;
  if (r == 2) {
    std::vector<std::vector<Perm>> none;
    Worker w(q, none, x1, q.degree);
    Perm last = x1.inverse();
    ++w.nodes;
    if (cycle_type(last) == q.classes.back()) w.accept({x1, last});
    res.tuples = std::move(w.found);
    res.nodes = w.nodes;
    res.candidates = w.candidates;
    res.limit_hit = w.stop;
    return res;
  }

  std::vector<std::vector<Perm>> members;
  for (std::size_t i = 2; i + 1 < r; ++i) members.push_back(class_members(q.classes[i]));
  std::vector<Perm> second = class_members(q.classes[1]);

  unsigned nw = std::max(1u, std::min<unsigned>(q.workers, static_cast<unsigned>(second.size())));
  std::vector<Worker> workers;
  for (unsigned k = 0; k < nw; ++k) workers.emplace_back(q, members, x1, q.degree);
  // branch b goes to worker b % nw; each worker keeps (branch, tuple) order
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> marks(nw);
  auto body = [&](unsigned k) {
    for (std::size_t b = k; b < second.size() && !workers[k].stop; b += nw) {
      std::size_t before = workers[k].found.size();
      workers[k].run_branch(second[b]);
      marks[k].emplace_back(b, workers[k].found.size() - before);
    }
  };
  if (nw == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned k = 0; k < nw; ++k) threads.emplace_back(body, k);
    for (auto& th : threads) th.join();
  }

  // merge by branch index
  std::vector<std::tuple<std::size_t, unsigned, std::size_t, std::size_t>> spans;  // branch, worker, offset, count
  for (unsigned k = 0; k < nw; ++k) {
    std::size_t off = 0;
    for (auto [b, c] : marks[k]) {
      spans.emplace_back(b, k, off, c);
      off += c;
    }
    res.nodes += workers[k].nodes;
    res.candidates += workers[k].candidates;
    res.limit_hit = res.limit_hit || workers[k].stop;
  }
  std::sort(spans.begin(), spans.end());
  std::set<std::vector<Perm>> seen;
  for (auto [b, k, off, c] : spans)
    for (std::size_t i = 0; i < c; ++i) {
      auto& t = workers[k].found[off + i];
      if (q.dedupe && nw > 1 && !seen.insert(canonical_tuple_form(t)).second) continue;
      res.tuples.push_back(std::move(t));
    }
  if (q.limit && res.tuples.size() > q.limit) res.tuples.resize(q.limit);
  return res;
}

ExistenceResult exists_primitive_tuple(SearchQuery q) {
  q.require_transitive = true;
  q.require_primitive = true;
  q.limit = 1;
  q.dedupe = false;
  auto r = find_tuples(q);
  ExistenceResult out;
  out.nodes = r.nodes;
  out.candidates = r.candidates;
  if (!r.tuples.empty()) {
    out.exists = true;
    out.witness = r.tuples.front();
  }
  return out;
}

std::vector<Perm> canonical_tuple_form(const std::vector<Perm>& tuple) {
  if (tuple.empty()) return {};
  std::size_t n = tuple.front().degree();
  std::vector<std::vector<Point>> best;
  constexpr Point kUnset = ~Point{0};
  for (Point start = 0; start < n; ++start) {
    std::vector<Point> label(n, kUnset), order{start};
    label[start] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (const auto& x : tuple) {
        Point v = x[order[k]];
        if (label[v] == kUnset) {
          label[v] = static_cast<Point>(order.size());
          order.push_back(v);
        }
      }
    if (order.size() != n) throw InvalidInput("canonical form needs a transitive tuple");
    std::vector<std::vector<Point>> form;
    for (const auto& x : tuple) {
      std::vector<Point> img(n);
      for (Point v = 0; v < n; ++v) img[label[v]] = label[x[v]];
      form.push_back(std::move(img));
    }
    if (best.empty() || form < best) best = std::move(form);
  }
  std::vector<Perm> out;
  for (auto& img : best) out.emplace_back(std::move(img));
  return out;
}

}  // namespace wm
