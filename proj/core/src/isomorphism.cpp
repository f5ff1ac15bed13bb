#include <algorithm>
#include <map>
#include <string>

#include "modlex/errors.hpp"
#include "modlex/graph.hpp"

namespace modlex {
namespace {

// 1-dimensional Weisfeiler-Leman refinement run on both graphs at once, so
// that equal color ids mean the same thing on either side.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> joint_refinement(const Graph& g,
                                                                               const Graph& h) {
  std::vector<std::size_t> cg(g.order()), ch(h.order());
  for (Vertex v = 0; v < g.order(); ++v) cg[v] = g.degree(v);
  for (Vertex v = 0; v < h.order(); ++v) ch[v] = h.degree(v);

  std::size_t classes = 0;
  for (;;) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    std::map<Signature, std::size_t> palette;
    auto signature = [](const Graph& graph, const std::vector<std::size_t>& colors, Vertex v) {
      Signature sig{colors[v], {}};
      graph.neighbors(v).for_each([&](Vertex w) { sig.second.push_back(colors[w]); });
      std::sort(sig.second.begin(), sig.second.end());
      return sig;
    };
    std::vector<Signature> sg, sh;
    for (Vertex v = 0; v < g.order(); ++v) sg.push_back(signature(g, cg, v));
    for (Vertex v = 0; v < h.order(); ++v) sh.push_back(signature(h, ch, v));
    for (const auto& s : sg) palette.emplace(s, 0);
    for (const auto& s : sh) palette.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [sig, id] : palette) id = next++;
    for (Vertex v = 0; v < g.order(); ++v) cg[v] = palette[sg[v]];
    for (Vertex v = 0; v < h.order(); ++v) ch[v] = palette[sh[v]];
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  return {cg, ch};
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, std::vector<std::size_t> cg,
          std::vector<std::size_t> ch)
      : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)),
        map_(g.order(), kNone), used_(h.order(), false) {
    plan_order();
  }

  bool run() { return extend(0); }

 private:
  static constexpr Vertex kNone = kUnreachable;

  // Vertices of g are matched in an order that keeps the mapped region
  // connected where possible, which lets adjacency checks prune early.
  void plan_order() {
    std::map<std::size_t, std::size_t> class_size;
    for (auto c : cg_) ++class_size[c];
    std::vector<bool> placed(g_.order(), false);
    std::vector<std::size_t> mapped_neighbors(g_.order(), 0);
    for (std::size_t step = 0; step < g_.order(); ++step) {
      Vertex best = kNone;
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (placed[v]) continue;
        if (best == kNone || mapped_neighbors[v] > mapped_neighbors[best] ||
            (mapped_neighbors[v] == mapped_neighbors[best] &&
             class_size[cg_[v]] < class_size[cg_[best]])) {
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      g_.neighbors(best).for_each([&](Vertex w) { ++mapped_neighbors[w]; });
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex cand = 0; cand < h_.order(); ++cand) {
      if (used_[cand] || ch_[cand] != cg_[v]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const Vertex u = order_[i];
        consistent = g_.adjacent(u, v) == h_.adjacent(map_[u], cand);
      }
      if (!consistent) continue;
      map_[v] = cand;
      used_[cand] = true;
      if (extend(depth + 1)) return true;
      used_[cand] = false;
      map_[v] = kNone;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::size_t> cg_, ch_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h, const IsomorphismOptions& options) {
  if (g.order() > options.max_order || h.order() > options.max_order) {
    throw BudgetExceeded("isomorphism test limited to " + std::to_string(options.max_order) +
                         " vertices");
  }
  if (g.order() != h.order() || g.size() != h.size()) return false;
  auto [cg, ch] = joint_refinement(g, h);
  auto sorted_g = cg;
  auto sorted_h = ch;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_g != sorted_h) return false;
  return Matcher(g, h, std::move(cg), std::move(ch)).run();
}

}  // namespace modlex
