#include "bricklab/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "bricklab/errors.hpp"
#include "dense_graph.hpp"

namespace bricklab {
namespace {

using Matrix = std::vector<int>;

Matrix multiplicity_matrix(const detail::DenseGraph& d) {
  const int n = d.size();
  Matrix m(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : d.edges) {
    ++m[static_cast<std::size_t>(e.a) * n + e.b];
    ++m[static_cast<std::size_t>(e.b) * n + e.a];
  }
  return m;
}

// Joint colour refinement over both graphs so that colours are comparable.
// Returns false if the colour histograms diverge.
bool refine(const detail::DenseGraph& g, const Matrix& mg, std::vector<int>& cg,
            const detail::DenseGraph& h, const Matrix& mh, std::vector<int>& ch) {
  const int n = g.size();
  using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
  auto signature = [n](const detail::DenseGraph& d, const Matrix& m, const std::vector<int>& c,
                       int v) {
    Signature s{c[v], {}};
    for (int w : d.neighbours[v]) s.second.emplace_back(c[w], m[static_cast<std::size_t>(v) * n + w]);
    std::sort(s.second.begin(), s.second.end());
    return s;
  };

  for (int v = 0; v < n; ++v) {
    cg[v] = static_cast<int>(g.incident[v].size());
    ch[v] = static_cast<int>(h.incident[v].size());
  }
  int classes = 0;
  while (true) {
    std::map<Signature, int> palette;
    std::vector<Signature> sg(n), sh(n);
    for (int v = 0; v < n; ++v) {
      sg[v] = signature(g, mg, cg, v);
      sh[v] = signature(h, mh, ch, v);
      palette.emplace(sg[v], 0);
      palette.emplace(sh[v], 0);
    }
    int next = 0;
    for (auto& [sig, colour] : palette) colour = next++;
    for (int v = 0; v < n; ++v) {
      cg[v] = palette[sg[v]];
      ch[v] = palette[sh[v]];
    }
    std::vector<int> hist_g(next, 0), hist_h(next, 0);
    for (int v = 0; v < n; ++v) {
      ++hist_g[cg[v]];
      ++hist_h[ch[v]];
    }
    if (hist_g != hist_h) return false;
    if (next == classes) return true;
    classes = next;
  }
}

class Search {
 public:
  Search(const detail::DenseGraph& g, const detail::DenseGraph& h)
      : g_(g), h_(h), n_(g.size()), mg_(multiplicity_matrix(g)), mh_(multiplicity_matrix(h)),
        cg_(n_), ch_(n_), image_(n_, -1), used_(n_, 0) {}

  std::optional<std::vector<int>> run() {
    if (!refine(g_, mg_, cg_, h_, mh_, ch_)) return std::nullopt;
    order_ = placement_order();
    if (!extend(0)) return std::nullopt;
    return image_;
  }

 private:
  // Rarest colour first, then greedily the vertex with most placed neighbours.
  std::vector<int> placement_order() const {
    std::vector<int> class_size(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) ++class_size[cg_[v]];
    std::vector<int> order;
    std::vector<char> placed(n_, 0);
    std::vector<int> links(n_, 0);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        auto key = [&](int x) { return std::make_tuple(-links[x], class_size[cg_[x]], x); };
        if (best == -1 || key(v) < key(best)) best = v;
      }
      placed[best] = 1;
      order.push_back(best);
      for (int w : g_.neighbours[best]) ++links[w];
    }
    return order;
  }

  bool consistent(int v, int candidate) const {
    for (int w : g_.neighbours[v]) {
      if (image_[w] == -1) continue;
      if (mg_[static_cast<std::size_t>(v) * n_ + w] !=
          mh_[static_cast<std::size_t>(candidate) * n_ + image_[w]]) {
        return false;
      }
    }
    int placed_neighbours = 0;
    for (int w : g_.neighbours[v]) placed_neighbours += image_[w] != -1;
    int mapped_neighbours = 0;
    for (int x : h_.neighbours[candidate]) mapped_neighbours += used_[x] != 0;
    return placed_neighbours == mapped_neighbours;
  }

  bool extend(int depth) {
    if (depth == n_) return true;
    const int v = order_[depth];
    for (int c = 0; c < n_; ++c) {
      if (used_[c] || ch_[c] != cg_[v] || !consistent(v, c)) continue;
      image_[v] = c;
      used_[c] = 1;
      if (extend(depth + 1)) return true;
      image_[v] = -1;
      used_[c] = 0;
    }
    return false;
  }

  const detail::DenseGraph& g_;
  const detail::DenseGraph& h_;
  int n_;
  Matrix mg_, mh_;
  std::vector<int> cg_, ch_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<VertexMap> find_isomorphism(const MultiGraph& g, const MultiGraph& h,
                                          const IsomorphismOptions& options) {
  const std::size_t largest = std::max(g.vertex_count(), h.vertex_count());
  if (largest > options.max_vertices) {
    throw ScaleError("isomorphism search limited to " + std::to_string(options.max_vertices) +
                     " vertices, got " + std::to_string(largest));
  }
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
    return std::nullopt;
  }
  const detail::DenseGraph dg(g), dh(h);
  auto image = Search(dg, dh).run();
  if (!image) return std::nullopt;
  VertexMap map;
  for (int v = 0; v < dg.size(); ++v) map.emplace(dg.vertex_of[v], dh.vertex_of[(*image)[v]]);
  return map;
}

bool is_isomorphism(const MultiGraph& g, const MultiGraph& h, const VertexMap& map) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (map.size() != g.vertex_count()) return false;
  std::vector<VertexId> images;
  for (const auto& [from, to] : map) {
    if (!g.has_vertex(from) || !h.has_vertex(to)) return false;
    images.push_back(to);
  }
  if (normalized(images).size() != map.size()) return false;
  for (const Edge& e : g.edges()) {
    if (g.multiplicity(e.a, e.b) != h.multiplicity(map.at(e.a), map.at(e.b))) return false;
  }
  return true;
}

}  // namespace bricklab
