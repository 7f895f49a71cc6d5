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

#include "catch_amalgamated.hpp"
#include "magicpovm/graph.hpp"
#include "support.hpp"

using namespace magicpovm;
using testsupport::Gen;

namespace {

// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
SimpleGraph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  SimpleGraph g(pairs.size());
  for (std::size_t u = 0; u < pairs.size(); ++u)
    for (std::size_t v = u + 1; v < pairs.size(); ++v) {
      auto [a, b] = pairs[u];
      auto [c, d] = pairs[v];
      if (a != c && a != d && b != c && b != d) g.add_edge(u, v);
    }
  return g;
}

SimpleGraph prism5() {
  SimpleGraph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 1) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

using Poly = std::vector<Rational>;  // coefficient of x^k at index k

// Characteristic polynomial by Faddeev-LeVerrier over Q.
Poly charpoly(const SimpleGraph& g) {
  const std::size_t n = g.order();
  using M = std::vector<std::vector<Rational>>;
  M a(n, std::vector<Rational>(n));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  auto mul = [&](const M& x, const M& y) {
    M r(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i][k] != 0)
          for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
    return r;
  };
  Poly c(n + 1);
  c[n] = 1;
  M mk(n, std::vector<Rational>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    M next = mul(a, mk);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = next;
    M am = mul(a, mk);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

Poly from_roots(const std::vector<std::pair<long, int>>& roots) {
  Poly p{1};
  for (auto [r, m] : roots)
    for (int k = 0; k < m; ++k) {
      Poly q(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i + 1] += p[i];
        q[i] -= Rational(r) * p[i];
      }
      p = q;
    }
  return p;
}

std::vector<std::vector<std::size_t>> brute_maximal_cliques(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) ok = false;
    if (ok) cliques.push_back(mask);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto m : cliques) {
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v)
      if (!(m >> v & 1) && std::find(cliques.begin(), cliques.end(), m | (1u << v)) != cliques.end()) maximal = false;
    if (!maximal) continue;
    std::vector<std::size_t> c;
    for (std::size_t v = 0; v < n; ++v)
      if (m >> v & 1) c.push_back(v);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Petersen spectrum from the characteristic polynomial oracle") {
  SimpleGraph p = petersen();
  CHECK(p.size() == 15);
  CHECK(charpoly(p) == from_roots({{3, 1}, {1, 5}, {-2, 4}}));
  auto s = graph_spectrum(p, {3, 1, -2, 0, 2, -1});
  CHECK(s.multiplicity[3] == 1);
  CHECK(s.multiplicity[1] == 5);
  CHECK(s.multiplicity[-2] == 4);
  CHECK(s.multiplicity[0] == 0);
  CHECK(is_petersen(p));
}

TEST_CASE("other cubic graphs on ten vertices are rejected") {
  SimpleGraph q = prism5();
  CHECK(q.degree_histogram() == std::map<std::size_t, std::size_t>{{3, 10}});
  CHECK_FALSE(is_petersen(q));
  // Relabeled Petersen still passes.
  SimpleGraph p = petersen();
  std::vector<std::size_t> perm{3, 7, 0, 9, 1, 5, 8, 2, 6, 4};
  SimpleGraph r(10);
  for (auto [u, v] : p.edges()) r.add_edge(perm[u], perm[v]);
  CHECK(is_petersen(r));
}

TEST_CASE("complete graph K4") {
  SimpleGraph k(4);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = u + 1; v < 4; ++v) k.add_edge(u, v);
  CHECK(charpoly(k) == from_roots({{3, 1}, {-1, 3}}));
  auto s = graph_spectrum(k, {3, -1});
  CHECK(s.complete());
  CHECK(maximal_cliques(k) == std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}});
}

TEST_CASE("maximal cliques agree with brute force on random graphs") {
  Gen g(47);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 12));
    const long density = g.integer(20, 80);
    SimpleGraph h(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (g.integer(0, 99) < density) h.add_edge(u, v);
    INFO("n=" << n << " edges=" << h.size());
    CHECK(maximal_cliques(h) == brute_maximal_cliques(h));
    std::map<std::size_t, std::size_t> hist;
    for (const auto& c : brute_maximal_cliques(h)) ++hist[c.size()];
    CHECK(clique_histogram(h) == hist);
  }
}

TEST_CASE("components, induced subgraphs and exports") {
  SimpleGraph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  auto comps = component_vertices(g);
  CHECK(comps.size() == 3);
  CHECK(comps[0] == std::vector<std::size_t>{0, 1, 2});
  SimpleGraph sub = g.induced({0, 1, 2});
  CHECK(sub.order() == 3);
  CHECK(sub.size() == 2);
  CHECK(to_edge_list(g) == "0 1\n1 2\n3 4\n");
  CHECK(to_dot(g).find("0 -- 1;") != std::string::npos);
  g.add_edge(0, 1);
  CHECK(g.size() == 3);
  CHECK_THROWS(g.add_edge(2, 2));
}
