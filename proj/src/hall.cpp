#include "carnot/hall.hpp"

#include <map>

#include "carnot/errors.hpp"

namespace carnot {

std::vector<HallElement> hall_basis(std::size_t rank, std::size_t step) {
  if (rank == 0 || step == 0) throw Error("hall_basis needs rank >= 1 and step >= 1");
  std::vector<HallElement> h;
  for (std::size_t i = 0; i < rank; ++i) {
    HallElement e;
    e.degree = 1;
    e.generator = i;
    e.name = "X" + std::to_string(i + 1);
    h.push_back(e);
  }
  for (std::size_t d = 2; d <= step; ++d) {
    std::size_t count = h.size();
    for (std::size_t y = 0; y < count; ++y)
      for (std::size_t z = y + 1; z < count; ++z) {
        if (h[y].degree + h[z].degree != d) continue;
        if (!h[z].is_generator() && static_cast<long>(y) < h[z].left) continue;
        HallElement e;
        e.degree = d;
        e.left = static_cast<long>(y);
        e.right = static_cast<long>(z);
        e.name = "[" + h[y].name + "," + h[z].name + "]";
        h.push_back(e);
      }
  }
  for (std::size_t i = 0; i < h.size(); ++i) h[i].order_rank = i;
  return h;
}

namespace {

using Combo = std::map<std::size_t, Rational>;

class Rewriter {
 public:
  Rewriter(const std::vector<HallElement>& h, std::size_t step) : h_(h), step_(step) {
    for (std::size_t i = 0; i < h.size(); ++i)
      if (!h[i].is_generator()) index_[{h[i].left, h[i].right}] = i;
  }

  // [a, b] for Hall elements a, b in Hall coordinates.
  Combo bracket(std::size_t a, std::size_t b) {
    if (a == b || h_[a].degree + h_[b].degree > step_) return {};
    if (a > b) return negate(bracket(b, a));
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Combo out;
    if (h_[b].is_generator() || static_cast<long>(a) >= h_[b].left) {
      out[index_.at({static_cast<long>(a), static_cast<long>(b)})] = 1;
    } else {
      // [a,[u,v]] = -[v,[a,u]] + [u,[a,v]]
      auto u = static_cast<std::size_t>(h_[b].left), v = static_cast<std::size_t>(h_[b].right);
      for (const auto& [w, c] : bracket(a, u)) accumulate(out, bracket(v, w), -c);
      for (const auto& [w, c] : bracket(a, v)) accumulate(out, bracket(u, w), c);
    }
    memo_[key] = out;
    return out;
  }

  std::map<std::pair<long, long>, std::size_t> index_;

 private:
  static Combo negate(Combo c) {
    for (auto& [k, x] : c) x = -x;
    return c;
  }
  static void accumulate(Combo& out, const Combo& add, const Rational& f) {
    for (const auto& [k, x] : add) {
      Rational& t = out[k];
      t += f * x;
      if (sgn(t) == 0) out.erase(k);
    }
  }

  const std::vector<HallElement>& h_;
  std::size_t step_;
  std::map<std::pair<std::size_t, std::size_t>, Combo> memo_;
};

}  // namespace

FreeNilpotent free_nilpotent(std::size_t rank, std::size_t step) {
  FreeNilpotent f;
  f.rank = rank;
  f.step = step;
  f.elements = hall_basis(rank, step);
  Rewriter rw(f.elements, step);
  f.hall_index = rw.index_;
  Presentation p;
  p.name = "free" + std::to_string(rank) + std::to_string(step);
  p.layers.assign(step, 0);
  for (const auto& e : f.elements) {
    ++p.layers[e.degree - 1];
    p.basis.push_back(e.name);
  }
  std::size_t n = f.elements.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Combo c = rw.bracket(a, b);
      if (c.empty()) continue;
      Vec r = zeros(n);
      for (const auto& [k, x] : c) r[k] = x;
      p.brackets.push_back({a, b, std::move(r)});
    }
  f.algebra = GradedLieAlgebra(p);
  return f;
}

Subspace ad_power_closure(const GradedLieAlgebra& g, const Vec& x, const Subspace& seed) {
  Subspace s = seed;
  Mat frontier = s.basis();
  while (!frontier.empty()) {
    Mat rows = s.basis();
    for (const auto& f : frontier) rows.push_back(g.bracket(x, f));
    Subspace next = Subspace::span(g.dim(), rows);
    if (next.dim() == s.dim()) break;
    frontier.clear();
    for (const auto& b : next.basis())
      if (!s.contains(b)) frontier.push_back(b);
    s = next;
  }
  return s;
}

}  // namespace carnot
