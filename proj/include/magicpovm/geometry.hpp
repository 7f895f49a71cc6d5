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

// Incidence structures read off k-fold projector products: blocks are
// k-subsets of the orbit whose cyclic trace takes a requested value, and
// optionally whose labeling Weyl operators multiply to a scalar.

#ifndef MAGICPOVM_GEOMETRY_HPP
#define MAGICPOVM_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "magicpovm/graph.hpp"
#include "magicpovm/parallel.hpp"
#include "magicpovm/pauli.hpp"
#include "magicpovm/povm.hpp"

namespace magicpovm {

struct Block {
  std::vector<std::size_t> indices;           // sorted
  std::vector<std::size_t> cycle;             // cyclic order whose trace is `trace`
  Cyclotomic trace;
  std::optional<Cyclotomic> op_phase;         // scalar of the witnessing operator product
  std::vector<std::size_t> witness;           // operator ordering giving op_phase
};

/// Which cyclic orders of a k-subset are examined. For k = 3 the two orders
/// are conjugate, so both modes agree; for k = 4 there are three classes.
enum class CycleMode { sorted, any };

struct TupleQuery {
  std::size_t k = 3;
  std::vector<Cyclotomic> targets;  // conjugates match as well
  CycleMode mode = CycleMode::any;
  double prescreen_tolerance = 1e-9;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> cyclic_classes(const std::vector<std::size_t>& s, CycleMode mode) {
  if (mode == CycleMode::sorted || s.size() < 4) return {s};
  if (s.size() != 4) throw std::invalid_argument("cyclic order search supports k = 3 or 4");
  return {{s[0], s[1], s[2], s[3]}, {s[0], s[1], s[3], s[2]}, {s[0], s[2], s[1], s[3]}};
}

// Normalized overlaps <v_i,v_j>/sqrt(N_i N_j); the float cycle product approximates the trace.
inline std::vector<std::complex<double>> float_overlaps(const Povm& p) {
  const std::size_t n = p.size();
  std::vector<std::complex<double>> g(n * n);
  std::vector<double> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = std::sqrt(p.norms()[i].to_complex().real());
  parallel_for(0, n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) g[i * n + j] = p.overlap(i, j).to_complex() / (root[i] * root[j]);
  });
  return g;
}

inline void next_subset(std::vector<std::size_t>& s, std::size_t n, bool& done) {
  const std::size_t k = s.size();
  std::size_t i = k;
  while (i > 0 && s[i - 1] == n - k + i - 1) --i;
  if (i == 0) {
    done = true;
    return;
  }
  ++s[i - 1];
  for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
}

}  // namespace detail

/// k-subsets (k in {3,4}) whose cyclic trace equals a target or its conjugate.
/// Float products prescreen; every returned block is confirmed exactly. The
/// stored cycle is oriented so the trace has nonnegative imaginary part.
inline std::vector<Block> tuple_traces(const Povm& p, const TupleQuery& q) {
  if (q.k < 3 || q.k > 4) throw std::invalid_argument("tuple size must be 3 or 4");
  if (!p.valid()) throw std::invalid_argument("tuple traces need a valid POVM");
  const std::size_t n = p.size();
  if (n < q.k) return {};
  const auto g = detail::float_overlaps(p);
  std::vector<std::complex<double>> targets;
  for (const auto& t : q.targets) targets.push_back(t.to_complex());
  auto near = [&](std::complex<double> z) {
    for (const auto& t : targets)
      if (std::abs(z - t) < q.prescreen_tolerance || std::abs(z - std::conj(t)) < q.prescreen_tolerance) return true;
    return false;
  };
  // One bucket per smallest index keeps the merge deterministic.
  std::vector<std::vector<Block>> buckets(n);
  parallel_for(0, n, [&](std::size_t first) {
    std::vector<std::size_t> rest(q.k - 1);
    if (n - first - 1 < rest.size()) return;
    for (std::size_t t = 0; t < rest.size(); ++t) rest[t] = first + 1 + t;
    bool done = false;
    while (!done) {
      std::vector<std::size_t> s{first};
      s.insert(s.end(), rest.begin(), rest.end());
      for (const auto& cyc : detail::cyclic_classes(s, q.mode)) {
        std::complex<double> z = 1;
        for (std::size_t t = 0; t < cyc.size(); ++t) z *= g[cyc[t] * n + cyc[(t + 1) % cyc.size()]];
        if (!near(z)) continue;
        Cyclotomic exact = p.cycle_trace(cyc);
        Cyclotomic exact_conj = exact.conj();
        bool hit = false;
        for (const auto& t : q.targets) hit = hit || exact == t || exact_conj == t;
        if (!hit) continue;
        Block b;
        b.indices = s;
        b.cycle = cyc;
        b.trace = exact;
        if (exact.to_complex().imag() < -1e-12) {
          std::reverse(b.cycle.begin() + 1, b.cycle.end());
          b.trace = exact_conj;
        }
        buckets[first].push_back(std::move(b));
        break;
      }
      detail::next_subset(rest, n, done);
    }
  });
  std::vector<Block> out;
  for (auto& b : buckets) out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  return out;
}

struct TraceCount {
  Cyclotomic value;  // representative with nonnegative imaginary part
  std::size_t count = 0;
};

/// Exact histogram of cyclic k-traces (sorted cyclic order), conjugate pairs merged.
inline std::vector<TraceCount> trace_census(const Povm& p, std::size_t k) {
  if (k < 3 || k > 4) throw std::invalid_argument("tuple size must be 3 or 4");
  const std::size_t n = p.size();
  std::vector<std::map<Cyclotomic, std::size_t, decltype(&representation_less)>> partial(
      n, std::map<Cyclotomic, std::size_t, decltype(&representation_less)>(&representation_less));
  parallel_for(0, n, [&](std::size_t first) {
    if (n - first - 1 < k - 1) return;
    std::vector<std::size_t> rest(k - 1);
    for (std::size_t t = 0; t < rest.size(); ++t) rest[t] = first + 1 + t;
    bool done = false;
    while (!done) {
      std::vector<std::size_t> s{first};
      s.insert(s.end(), rest.begin(), rest.end());
      Cyclotomic v = p.cycle_trace(s);
      if (v.to_complex().imag() < -1e-12) v = v.conj();
      ++partial[first][v];
      detail::next_subset(rest, n, done);
    }
  });
  std::map<Cyclotomic, std::size_t, decltype(&representation_less)> total(&representation_less);
  for (const auto& m : partial)
    for (const auto& [v, c] : m) total[v] += c;
  std::vector<TraceCount> out;
  for (const auto& [v, c] : total) out.push_back({v, c});
  std::sort(out.begin(), out.end(), [](const TraceCount& a, const TraceCount& b) {
    auto za = a.value.to_complex(), zb = b.value.to_complex();
    return za.real() != zb.real() ? za.real() < zb.real() : za.imag() < zb.imag();
  });
  return out;
}

enum class PhaseFilter { none, pm1, omega3, any };

inline bool phase_allowed(PhaseFilter f, const Cyclotomic& s) {
  switch (f) {
    case PhaseFilter::none:
    case PhaseFilter::any:
      return true;
    case PhaseFilter::pm1:
      return s == Cyclotomic(1) || s == Cyclotomic(-1);
    case PhaseFilter::omega3: {
      Cyclotomic cube = s * s * s;
      return cube == Cyclotomic(1);
    }
  }
  return false;
}

/// Orderings are tried lexicographically; the first allowed scalar is the witness.
inline std::optional<std::pair<std::vector<std::size_t>, Cyclotomic>> phase_witness(
    const Povm& p, const std::vector<std::size_t>& indices, PhaseFilter f) {
  std::vector<std::size_t> order = indices;
  std::sort(order.begin(), order.end());
  do {
    std::vector<WeylOperator> ops;
    for (std::size_t i : order) ops.push_back(p.labels()[i]);
    auto s = product_phase(ops);
    if (!s) return std::nullopt;  // the coset part does not depend on the ordering
    if (phase_allowed(f, *s)) return std::make_pair(order, *s);
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

/// Keeps blocks whose labeling operators multiply to an allowed scalar in some ordering.
inline std::vector<Block> filter_blocks(const std::vector<Block>& blocks, const Povm& p, PhaseFilter f) {
  if (f == PhaseFilter::none) return blocks;
  std::vector<std::optional<Block>> slots(blocks.size());
  parallel_for(0, blocks.size(), [&](std::size_t i) {
    auto w = phase_witness(p, blocks[i].indices, f);
    if (!w) return;
    Block b = blocks[i];
    b.witness = w->first;
    b.op_phase = w->second;
    slots[i] = std::move(b);
  });
  std::vector<Block> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

/// Blocks whose labeling operators pairwise commute.
inline bool operators_commute(const Povm& p, const Block& b) {
  for (std::size_t x = 0; x < b.indices.size(); ++x)
    for (std::size_t y = x + 1; y < b.indices.size(); ++y) {
      const auto& u = p.labels()[b.indices[x]];
      const auto& v = p.labels()[b.indices[y]];
      if (!(u * v == v * u)) return false;
    }
  return true;
}

struct IncidenceStructure {
  std::vector<std::size_t> points;        // sorted projector indices
  std::vector<std::string> point_labels;  // aligned with points
  std::vector<Block> lines;

  std::size_t point_position(std::size_t index) const {
    auto it = std::lower_bound(points.begin(), points.end(), index);
    if (it == points.end() || *it != index) throw std::out_of_range("not a point of the structure");
    return static_cast<std::size_t>(it - points.begin());
  }
};

/// Points are exactly the indices on the given lines; labels are phase-free operator names.
inline IncidenceStructure make_structure(const std::vector<Block>& lines, const std::vector<std::string>& index_labels) {
  IncidenceStructure s;
  std::set<std::size_t> pts;
  for (const auto& b : lines) pts.insert(b.indices.begin(), b.indices.end());
  s.points.assign(pts.begin(), pts.end());
  for (std::size_t i : s.points) s.point_labels.push_back(i < index_labels.size() ? index_labels[i] : std::to_string(i));
  s.lines = lines;
  return s;
}

inline std::vector<std::string> operator_labels(const Povm& p) {
  std::vector<std::string> out;
  for (const auto& op : p.labels()) out.push_back(bare_label(op));
  return out;
}

inline IncidenceStructure make_structure(const Povm& p, const std::vector<Block>& lines) {
  return make_structure(lines, operator_labels(p));
}

struct ConfigType {
  std::size_t points = 0, point_degree = 0, lines = 0, line_size = 0;
  bool uniform = false;
  std::map<std::size_t, std::size_t> degree_histogram;  // point degree -> count
  std::map<std::size_t, std::size_t> size_histogram;    // line size -> count

  /// "[9_4, 12_3]", "[63_3]" when symmetric, or a histogram form when not uniform.
  std::string str() const {
    auto hist = [](const std::map<std::size_t, std::size_t>& h) {
      std::string s = "{";
      bool first = true;
      for (auto [k, v] : h) {
        s += (first ? "" : ",") + std::to_string(k) + ":" + std::to_string(v);
        first = false;
      }
      return s + "}";
    };
    if (!uniform) return "non-uniform degrees " + hist(degree_histogram) + " sizes " + hist(size_histogram);
    if (points == lines && point_degree == line_size) return "[" + std::to_string(points) + "_" + std::to_string(line_size) + "]";
    return "[" + std::to_string(points) + "_" + std::to_string(point_degree) + ", " + std::to_string(lines) + "_" +
           std::to_string(line_size) + "]";
  }
  friend bool operator==(const ConfigType&, const ConfigType&) = default;
};

inline std::vector<std::size_t> point_degrees(const IncidenceStructure& s) {
  std::vector<std::size_t> deg(s.points.size(), 0);
  for (const auto& b : s.lines)
    for (std::size_t i : b.indices) ++deg[s.point_position(i)];
  return deg;
}

inline ConfigType config_type(const IncidenceStructure& s) {
  ConfigType c;
  c.points = s.points.size();
  c.lines = s.lines.size();
  for (std::size_t d : point_degrees(s)) ++c.degree_histogram[d];
  for (const auto& b : s.lines) ++c.size_histogram[b.indices.size()];
  c.uniform = c.degree_histogram.size() == 1 && c.size_histogram.size() == 1;
  if (c.uniform) {
    c.point_degree = c.degree_histogram.begin()->first;
    c.line_size = c.size_histogram.begin()->first;
  }
  return c;
}

/// Points adjacent when they share a line.
inline SimpleGraph collinearity_graph(const IncidenceStructure& s) {
  SimpleGraph g(s.point_labels);
  for (const auto& b : s.lines)
    for (std::size_t x = 0; x < b.indices.size(); ++x)
      for (std::size_t y = x + 1; y < b.indices.size(); ++y) g.add_edge(s.point_position(b.indices[x]), s.point_position(b.indices[y]));
  return g;
}

/// Bipartite point-line graph: points first, then lines.
inline SimpleGraph incidence_graph(const IncidenceStructure& s) {
  std::vector<std::string> labels = s.point_labels;
  for (std::size_t l = 0; l < s.lines.size(); ++l) labels.push_back("L" + std::to_string(l));
  SimpleGraph g(std::move(labels));
  for (std::size_t l = 0; l < s.lines.size(); ++l)
    for (std::size_t i : s.lines[l].indices) g.add_edge(s.point_position(i), s.points.size() + l);
  return g;
}

inline std::size_t shared_points(const Block& a, const Block& b) {
  std::size_t c = 0;
  for (std::size_t i : a.indices) c += std::binary_search(b.indices.begin(), b.indices.end(), i);
  return c;
}

/// Lines as vertices; an edge when two lines share exactly `shared` points.
inline SimpleGraph intersection_graph(const IncidenceStructure& s, std::size_t shared) {
  std::vector<std::string> labels;
  for (std::size_t l = 0; l < s.lines.size(); ++l) labels.push_back("L" + std::to_string(l));
  SimpleGraph g(std::move(labels));
  for (std::size_t a = 0; a < s.lines.size(); ++a)
    for (std::size_t b = a + 1; b < s.lines.size(); ++b)
      if (shared_points(s.lines[a], s.lines[b]) == shared) g.add_edge(a, b);
  return g;
}

/// Sub-structure on a subset of lines.
inline IncidenceStructure restrict_lines(const IncidenceStructure& s, const std::vector<std::size_t>& line_ids) {
  std::vector<Block> lines;
  for (std::size_t l : line_ids) lines.push_back(s.lines.at(l));
  std::vector<std::string> labels;
  std::map<std::size_t, std::string> by_index;
  for (std::size_t k = 0; k < s.points.size(); ++k) by_index[s.points[k]] = s.point_labels[k];
  IncidenceStructure out;
  std::set<std::size_t> pts;
  for (const auto& b : lines) pts.insert(b.indices.begin(), b.indices.end());
  out.points.assign(pts.begin(), pts.end());
  for (std::size_t i : out.points) out.point_labels.push_back(by_index.at(i));
  out.lines = std::move(lines);
  return out;
}

/// Connected components of the point-line incidence, ordered by smallest point.
inline std::vector<IncidenceStructure> components(const IncidenceStructure& s) {
  SimpleGraph inc = incidence_graph(s);
  std::vector<IncidenceStructure> out;
  for (const auto& comp : component_vertices(inc)) {
    std::vector<std::size_t> line_ids;
    for (std::size_t v : comp)
      if (v >= s.points.size()) line_ids.push_back(v - s.points.size());
    if (line_ids.empty()) continue;
    out.push_back(restrict_lines(s, line_ids));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named structures.

/// 9 points, 6 lines of 3 splitting into two parallel classes that form a 3x3 grid.
inline bool is_mermin_square(const IncidenceStructure& s) {
  auto c = config_type(s);
  if (!(c.uniform && c.points == 9 && c.lines == 6 && c.line_size == 3 && c.point_degree == 2)) return false;
  // Color lines by a 2-coloring of the intersection graph: rows never meet each other.
  SimpleGraph meet = intersection_graph(s, 1);
  SimpleGraph disjoint = intersection_graph(s, 0);
  for (std::size_t a = 0; a < 6; ++a)
    if (meet.degree(a) != 3 || disjoint.degree(a) != 2) return false;
  auto parts = component_vertices(disjoint);
  return parts.size() == 2 && parts[0].size() == 3 && parts[1].size() == 3;
}

/// 6 points, 4 lines of 3, every two lines meeting in exactly one point.
inline bool is_pasch(const IncidenceStructure& s) {
  if (s.points.size() != 6 || s.lines.size() != 4) return false;
  for (const auto& b : s.lines)
    if (b.indices.size() != 3) return false;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      if (shared_points(s.lines[a], s.lines[b]) != 1) return false;
  return true;
}

/// [9_4, 12_3] with every pair of points on exactly one line (the affine plane of order 3).
inline bool is_hesse(const IncidenceStructure& s) {
  auto c = config_type(s);
  if (!(c.uniform && c.points == 9 && c.point_degree == 4 && c.lines == 12 && c.line_size == 3)) return false;
  std::map<std::pair<std::size_t, std::size_t>, int> pair_count;
  for (const auto& b : s.lines)
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = x + 1; y < 3; ++y) ++pair_count[{b.indices[x], b.indices[y]}];
  if (pair_count.size() != 36) return false;
  for (const auto& [k, v] : pair_count)
    if (v != 1) return false;
  return true;
}

namespace detail {

// Points A1 A2 A3 B1 B2 B3 C1 C2 C3 = 0..8.
inline const std::array<std::array<int, 3>, 9>& pappus_lines() {
  static const std::array<std::array<int, 3>, 9> lines = {{{0, 1, 2},
                                                            {3, 4, 5},
                                                            {6, 7, 8},
                                                            {0, 4, 6},
                                                            {1, 3, 6},
                                                            {0, 5, 7},
                                                            {2, 3, 7},
                                                            {1, 5, 8},
                                                            {2, 4, 8}}};
  return lines;
}

}  // namespace detail

/// A bijection of points onto the canonical Pappus table mapping lines onto
/// lines, found by exhaustive search; empty when none exists.
inline std::optional<std::vector<std::size_t>> pappus_isomorphism(const IncidenceStructure& s) {
  auto c = config_type(s);
  if (!(c.uniform && c.points == 9 && c.lines == 9 && c.line_size == 3 && c.point_degree == 3)) return std::nullopt;
  std::set<std::array<int, 3>> target;
  for (auto l : detail::pappus_lines()) target.insert(l);
  std::vector<std::array<std::size_t, 3>> lines;
  for (const auto& b : s.lines) lines.push_back({s.point_position(b.indices[0]), s.point_position(b.indices[1]), s.point_position(b.indices[2])});
  std::vector<int> perm(9);
  for (int i = 0; i < 9; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    bool ok = true;
    for (const auto& l : lines) {
      std::array<int, 3> img = {perm[l[0]], perm[l[1]], perm[l[2]]};
      std::sort(img.begin(), img.end());
      if (!target.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<std::size_t> out(9);
      for (std::size_t k = 0; k < 9; ++k) out[k] = static_cast<std::size_t>(perm[k]);
      return out;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline bool is_pappus(const IncidenceStructure& s) { return pappus_isomorphism(s).has_value(); }

/// Names of the recognized structures, in a fixed order.
inline std::vector<std::string> named_detectors(const IncidenceStructure& s) {
  std::vector<std::string> out;
  auto c = config_type(s);
  if (is_hesse(s)) out.push_back("Hesse");
  if (is_mermin_square(s)) out.push_back("Mermin square");
  if (is_pasch(s)) out.push_back("Pasch");
  if (c.uniform && c.points == 9 && c.lines == 9 && c.line_size == 3) {
    out.push_back("[9_3]");
    if (is_pappus(s)) out.push_back("Pappus");
  }
  return out;
}

struct SpectrumCheck {
  std::map<long, std::size_t> claimed;
  std::size_t claimed_sum = 0;
  IntegerSpectrum computed;
  bool claim_consistent = false;  // claimed multiplicities sum to the vertex count
  bool claim_matches = false;     // computed multiplicities equal the claim exactly
};

/// Computes multiplicities for the claimed eigenvalues, 0, and any extras, and
/// compares with the claim without trusting it.
inline SpectrumCheck check_spectrum(const SimpleGraph& g, const std::map<long, std::size_t>& claimed,
                                    const std::vector<long>& extra = {}) {
  SpectrumCheck out;
  out.claimed = claimed;
  std::set<long> cand{0};
  for (auto [v, m] : claimed) {
    cand.insert(v);
    out.claimed_sum += m;
  }
  cand.insert(extra.begin(), extra.end());
  out.computed = graph_spectrum(g, std::vector<long>(cand.begin(), cand.end()));
  out.claim_consistent = out.claimed_sum == g.order();
  out.claim_matches = true;
  for (auto [v, m] : claimed) {
    auto it = out.computed.multiplicity.find(v);
    if (it == out.computed.multiplicity.end() || it->second != m) out.claim_matches = false;
  }
  for (auto [v, m] : out.computed.multiplicity)
    if (m != 0 && !claimed.count(v)) out.claim_matches = false;
  return out;
}

}  // namespace magicpovm

#endif  // MAGICPOVM_GEOMETRY_HPP
