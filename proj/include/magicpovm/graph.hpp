// Copyright 2026 The magicpovm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAGICPOVM_GRAPH_HPP
#define MAGICPOVM_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "magicpovm/matrix.hpp"

namespace magicpovm {

/// Undirected graph without loops or multi-edges, stored as sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : labels_(n), adj_(n) {
    for (std::size_t v = 0; v < n; ++v) labels_[v] = std::to_string(v);
  }
  explicit SimpleGraph(std::vector<std::string> labels) : labels_(std::move(labels)), adj_(labels_.size()) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const {
    std::size_t e = 0;
    for (const auto& a : adj_) e += a.size();
    return e / 2;
  }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u >= order() || v >= order()) throw std::out_of_range("vertex out of range");
    auto insert = [](std::vector<std::size_t>& list, std::size_t x) {
      auto it = std::lower_bound(list.begin(), list.end(), x);
      if (it == list.end() || *it != x) list.insert(it, x);
    };
    insert(adj_[u], v);
    insert(adj_[v], u);
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    return std::binary_search(adj_.at(u).begin(), adj_.at(u).end(), v);
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < order(); ++u)
      for (std::size_t v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Induced subgraph on the given vertices, in the given order.
  SimpleGraph induced(const std::vector<std::size_t>& vertices) const {
    std::vector<std::string> labels;
    std::map<std::size_t, std::size_t> index;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      index[vertices[k]] = k;
      labels.push_back(labels_.at(vertices[k]));
    }
    SimpleGraph g(std::move(labels));
    for (std::size_t k = 0; k < vertices.size(); ++k)
      for (std::size_t w : adj_.at(vertices[k])) {
        auto it = index.find(w);
        if (it != index.end() && k < it->second) g.add_edge(k, it->second);
      }
    return g;
  }

  ExactMatrix adjacency() const {
    ExactMatrix m(order(), order());
    for (std::size_t u = 0; u < order(); ++u)
      for (std::size_t v : adj_[u]) m(u, v) = Cyclotomic(1);
    return m;
  }

  /// Distinct degrees with counts.
  std::map<std::size_t, std::size_t> degree_histogram() const {
    std::map<std::size_t, std::size_t> h;
    for (const auto& a : adj_) ++h[a.size()];
    return h;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> adj_;
};

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<std::size_t>> component_vertices(const SimpleGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (std::size_t w : g.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<SimpleGraph> components(const SimpleGraph& g) {
  std::vector<SimpleGraph> out;
  for (const auto& c : component_vertices(g)) out.push_back(g.induced(c));
  return out;
}

inline IntegerSpectrum graph_spectrum(const SimpleGraph& g, const std::vector<long>& candidates) {
  return integer_spectrum(g.adjacency(), candidates);
}

/// 10 vertices, 3-regular, and exact spectrum {3:1, 1:5, -2:4}.
inline bool is_petersen(const SimpleGraph& g) {
  if (g.order() != 10) return false;
  for (std::size_t v = 0; v < 10; ++v)
    if (g.degree(v) != 3) return false;
  auto s = graph_spectrum(g, {3, 1, -2});
  return s.complete() && s.multiplicity == std::map<long, std::size_t>{{-2, 4}, {1, 5}, {3, 1}};
}

namespace detail {

// Bron-Kerbosch with Tomita pivoting over bitset-free sorted vectors.
inline void bron_kerbosch(const SimpleGraph& g, std::vector<std::size_t>& r, std::vector<std::size_t> p,
                          std::vector<std::size_t> x, std::vector<std::vector<std::size_t>>& out) {
  if (p.empty() && x.empty()) {
    std::vector<std::size_t> c = r;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return;
  }
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (std::size_t u : *set) {
      std::size_t cnt = 0;
      for (std::size_t v : p) cnt += g.adjacent(u, v);
      if (cnt >= best) {
        best = cnt;
        pivot = u;
      }
    }
  std::vector<std::size_t> candidates;
  for (std::size_t v : p)
    if (!g.adjacent(pivot, v)) candidates.push_back(v);
  for (std::size_t v : candidates) {
    std::vector<std::size_t> np, nx;
    const auto& nb = g.neighbors(v);
    std::set_intersection(p.begin(), p.end(), nb.begin(), nb.end(), std::back_inserter(np));
    std::set_intersection(x.begin(), x.end(), nb.begin(), nb.end(), std::back_inserter(nx));
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace detail

/// All maximal cliques (inclusion-maximal), each sorted, in lexicographic order.
inline std::vector<std::vector<std::size_t>> maximal_cliques(const SimpleGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> r, p(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) p[v] = v;
  detail::bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of maximal cliques of each size.
inline std::map<std::size_t, std::size_t> clique_histogram(const SimpleGraph& g) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& c : maximal_cliques(g)) ++h[c.size()];
  return h;
}

/// Number of maximal cliques with exactly `size` vertices.
inline std::size_t max_cliques(const SimpleGraph& g, std::size_t size) {
  auto h = clique_histogram(g);
  auto it = h.find(size);
  return it == h.end() ? 0 : it->second;
}

/// Graphviz rendering; labels are quoted verbatim.
inline std::string to_dot(const SimpleGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.order(); ++v) os << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace magicpovm

#endif  // MAGICPOVM_GRAPH_HPP
