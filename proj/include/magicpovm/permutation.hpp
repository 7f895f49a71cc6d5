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

// Permutation gates, the groups two of them generate, and the eigenstates
// of their elements. A gate P acts on basis vectors as P e_j = e_image[j].

#ifndef MAGICPOVM_PERMUTATION_HPP
#define MAGICPOVM_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "magicpovm/cyclotomic.hpp"
#include "magicpovm/literal.hpp"
#include "magicpovm/matrix.hpp"
#include "magicpovm/parallel.hpp"
#include "magicpovm/pauli.hpp"

namespace magicpovm {

class PermGate {
 public:
  PermGate() = default;
  explicit PermGate(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
      if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = 1;
    }
  }

  static PermGate identity(int degree) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), 0);
    return PermGate(std::move(im));
  }

  int degree() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int j) const { return image_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& image() const noexcept { return image_; }

  /// (a * b)(x) = a(b(x)), matching the matrix product P_a P_b.
  friend PermGate operator*(const PermGate& a, const PermGate& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> im(a.image_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[x] = a.image_[static_cast<std::size_t>(b.image_[x])];
    return PermGate(std::move(im));
  }

  PermGate inverse() const {
    std::vector<int> im(image_.size());
    for (std::size_t x = 0; x < im.size(); ++x) im[static_cast<std::size_t>(image_[x])] = static_cast<int>(x);
    return PermGate(std::move(im));
  }

  int fixed_points() const {
    int c = 0;
    for (std::size_t x = 0; x < image_.size(); ++x) c += image_[x] == static_cast<int>(x);
    return c;
  }

  /// Cycles (including fixed points), each starting at its smallest element, ordered by that element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(image_.size(), 0);
    for (std::size_t s = 0; s < image_.size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> cyc;
      for (int x = static_cast<int>(s); !seen[static_cast<std::size_t>(x)]; x = image_[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        cyc.push_back(x);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  int order() const {
    int o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, static_cast<int>(c.size()));
    return o;
  }

  ExactMatrix matrix() const {
    ExactMatrix m(image_.size(), image_.size());
    for (std::size_t j = 0; j < image_.size(); ++j) m(static_cast<std::size_t>(image_[j]), j) = Cyclotomic(1);
    return m;
  }

  friend bool operator==(const PermGate&, const PermGate&) = default;
  friend bool operator<(const PermGate& a, const PermGate& b) { return a.image_ < b.image_; }

 private:
  std::vector<int> image_;
};

/// Exactly one fixed point: one diagonal 1 in the permutation matrix.
inline bool is_magic_gate(const PermGate& p) { return p.fixed_points() == 1; }

/// Cycle notation with 1-based points, fixed points omitted; "()" for the identity.
/// Cycle notation, except that a single cycle through every point is printed
/// as "[..]" one-line notation so that it parses back unambiguously.
inline std::string to_string(const PermGate& p) {
  std::string s;
  const auto cycles = p.cycles();
  if (cycles.size() == 1 && cycles[0].size() == p.image().size() && p.image().size() > 1) {
    s = "[";
    for (std::size_t k = 0; k < p.image().size(); ++k) s += (k ? "," : "") + std::to_string(p.image()[k] + 1);
    return s + "]";
  }
  for (const auto& c : cycles) {
    if (c.size() < 2) continue;
    s += "(";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k] + 1);
    s += ")";
  }
  return s.empty() ? "()" : s;
}

/// Parses "(2,3,1)" one-line notation (a single group listing all of 1..d) or
/// cycle notation "(1,2)(3,4)". "[2,3,1]" always means one-line notation.
inline PermGate parse_permutation(std::string_view text, int degree) {
  std::vector<std::vector<int>> groups;
  bool bracket = false;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  while (pos < text.size()) {
    char open = text[pos];
    if (open != '(' && open != '[') throw ParseError("permutation must use ( ) or [ ] groups: " + std::string(text));
    bracket = bracket || open == '[';
    const char close = open == '(' ? ')' : ']';
    std::size_t end = text.find(close, pos);
    if (end == std::string_view::npos) throw ParseError("unbalanced permutation group: " + std::string(text));
    std::vector<int> g;
    for (const auto& part : split_tuple(text.substr(pos + 1, end - pos - 1))) {
      if (part.empty()) continue;
      g.push_back(std::stoi(part));
    }
    groups.push_back(std::move(g));
    pos = end + 1;
    skip();
  }
  auto is_one_line = [&](const std::vector<int>& g) {
    if (static_cast<int>(g.size()) != degree) return false;
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < degree; ++k) {
      if (sorted[static_cast<std::size_t>(k)] != k + 1) return false;
    }
    return true;
  };
  if (groups.size() == 1 && (bracket || is_one_line(groups[0]))) {
    if (!is_one_line(groups[0])) throw ParseError("one-line permutation must list 1.." + std::to_string(degree));
    std::vector<int> im(static_cast<std::size_t>(degree));
    for (int k = 0; k < degree; ++k) im[static_cast<std::size_t>(k)] = groups[0][static_cast<std::size_t>(k)] - 1;
    return PermGate(std::move(im));
  }
  PermGate acc = PermGate::identity(degree);
  for (const auto& g : groups) {
    std::vector<int> im(static_cast<std::size_t>(degree));
    std::iota(im.begin(), im.end(), 0);
    for (std::size_t k = 0; k < g.size(); ++k) {
      int from = g[k] - 1;
      int to = g[(k + 1) % g.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree) throw ParseError("cycle point out of range");
      im[static_cast<std::size_t>(from)] = to;
    }
    acc = acc * PermGate(std::move(im));
  }
  return acc;
}

/// Order plus histogram of element orders; stands in for the isomorphism type.
struct GroupFingerprint {
  std::size_t order = 0;
  std::map<int, std::size_t> element_orders;
  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

struct MagicGroup {
  int degree = 0;
  PermGate g1, g2;
  std::vector<PermGate> elements;  // identity first, then breadth-first discovery order
  GroupFingerprint fingerprint;
  bool magic_generators = true;
};

class GroupCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Breadth-first closure of <g1, g2>. Non-magic generators are accepted with
/// magic_generators = false (the symmetric-group cases need this).
inline MagicGroup generate_group(const PermGate& g1, const PermGate& g2, std::size_t cap) {
  if (g1.degree() != g2.degree()) throw std::invalid_argument("generators must share a degree");
  if (cap < 1) throw std::invalid_argument("group order cap must be positive");
  MagicGroup g;
  g.degree = g1.degree();
  g.g1 = g1;
  g.g2 = g2;
  g.magic_generators = is_magic_gate(g1) && is_magic_gate(g2);
  std::set<PermGate> seen;
  std::deque<PermGate> queue;
  PermGate id = PermGate::identity(g.degree);
  seen.insert(id);
  queue.push_back(id);
  g.elements.push_back(id);
  while (!queue.empty()) {
    PermGate cur = queue.front();
    queue.pop_front();
    for (const PermGate* gen : {&g1, &g2}) {
      PermGate next = cur * *gen;
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw GroupCapExceeded("group order exceeds cap " + std::to_string(cap));
        g.elements.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  g.fingerprint.order = g.elements.size();
  for (const auto& e : g.elements) ++g.fingerprint.element_orders[e.order()];
  return g;
}

struct Eigenspace {
  Cyclotomic eigenvalue;
  std::vector<ExactVector> basis;
};

/// Eigenvectors read off the cycle structure: a k-cycle (c_0 .. c_{k-1})
/// gives sum_s zeta_k^(-ts) e_{c_s} with eigenvalue zeta_k^t. Eigenspaces are
/// listed by increasing eigenvalue argument; entries live in Q(zeta_order).
inline std::vector<Eigenspace> eigenstates(const PermGate& p) {
  const int order = p.order();
  const auto cycles = p.cycles();
  std::map<int, Eigenspace> by_exponent;  // eigenvalue = zeta_order^exponent
  for (const auto& cyc : cycles) {
    const int k = static_cast<int>(cyc.size());
    for (int t = 0; t < k; ++t) {
      const int exponent = t * (order / k);
      ExactVector v(static_cast<std::size_t>(p.degree()));
      for (auto& e : v) e = Cyclotomic::zero(order);
      for (int s = 0; s < k; ++s) v[static_cast<std::size_t>(cyc[static_cast<std::size_t>(s)])] = Cyclotomic::zeta(order, -static_cast<long>(t) * s * (order / k));
      auto& space = by_exponent[exponent];
      if (space.basis.empty()) space.eigenvalue = Cyclotomic::zeta(order, exponent);
      space.basis.push_back(std::move(v));
    }
  }
  std::vector<Eigenspace> out;
  for (auto& [e, space] : by_exponent) out.push_back(std::move(space));
  return out;
}

/// Counts coset representatives T with T v proportional to v.
inline std::size_t stabilizer_count(const ExactVector& v, const PauliSpec& spec) {
  if (v.size() != spec.dimension()) throw ShapeError("state dimension does not match the Pauli spec");
  std::size_t pivot = v.size();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) {
      pivot = k;
      break;
    }
  }
  if (pivot == v.size()) throw std::invalid_argument("zero vector");
  const Cyclotomic inv_pivot = v[pivot].inverse();
  std::size_t count = 0;
  for (const auto& t : cosets(spec)) {
    ExactVector w = t.apply(v);
    Cyclotomic lambda = w[pivot] * inv_pivot;
    if (lambda.is_zero()) continue;
    bool prop = true;
    for (std::size_t k = 0; k < v.size() && prop; ++k) prop = w[k] == lambda * v[k];
    count += prop;
  }
  return count;
}

/// Stabilizer state: exactly d coset representatives fix the ray of v.
inline bool is_stabilizer_state(const ExactVector& v, const PauliSpec& spec) {
  return stabilizer_count(v, spec) == spec.dimension();
}

/// v scaled so that its first nonzero entry is 1: a canonical representative of the ray.
inline ExactVector projective_normal_form(const ExactVector& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const Cyclotomic inv = v[k].inverse();
    ExactVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * inv;
    return out;
  }
  throw std::invalid_argument("zero vector has no ray");
}

struct CandidateState {
  ExactVector vector;  // unnormalized
  Cyclotomic norm_sq;
  PermGate source;     // group element it was read from
  Cyclotomic eigenvalue;
};

/// Eigenspace vectors of every group element (plus pairwise sums and differences
/// within an eigenspace when combo_depth = 1), deduplicated up to scalars, with
/// stabilizer states removed. Discovery order is deterministic.
inline std::vector<CandidateState> candidate_states(const MagicGroup& g, int combo_depth, const PauliSpec& spec) {
  if (combo_depth < 0 || combo_depth > 1) throw std::invalid_argument("combo depth must be 0 or 1");
  if (static_cast<std::size_t>(g.degree) != spec.dimension()) throw ShapeError("group degree does not match the Pauli spec");
  int conductor = 1;
  for (const auto& e : g.elements) conductor = std::lcm(conductor, e.order());

  auto key_less = [](const ExactVector& a, const ExactVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (representation_less(a[i], b[i])) return true;
      if (representation_less(b[i], a[i])) return false;
    }
    return false;
  };
  std::set<ExactVector, decltype(key_less)> seen(key_less);
  std::vector<CandidateState> raw;
  for (const auto& element : g.elements) {
    for (const auto& space : eigenstates(element)) {
      std::vector<ExactVector> pool;
      for (const auto& b : space.basis) pool.push_back(b.embedded(conductor));
      if (combo_depth == 1) {
        const std::size_t base = pool.size();
        for (std::size_t a = 0; a < base; ++a)
          for (std::size_t b = a + 1; b < base; ++b) {
            ExactVector plus(pool[a].size()), minus(pool[a].size());
            for (std::size_t k = 0; k < plus.size(); ++k) {
              plus[k] = pool[a][k] + pool[b][k];
              minus[k] = pool[a][k] - pool[b][k];
            }
            pool.push_back(std::move(plus));
            pool.push_back(std::move(minus));
          }
      }
      for (auto& v : pool) {
        ExactVector key = projective_normal_form(v);
        if (!seen.insert(key).second) continue;
        raw.push_back({std::move(key), Cyclotomic(), element, space.eigenvalue});
      }
    }
  }
  std::vector<char> keep(raw.size(), 0);
  parallel_for(0, raw.size(), [&](std::size_t i) {
    keep[i] = !is_stabilizer_state(raw[i].vector, spec);
  });
  std::vector<CandidateState> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!keep[i]) continue;
    raw[i].norm_sq = inner(raw[i].vector, raw[i].vector);
    out.push_back(std::move(raw[i]));
  }
  return out;
}

/// |<u,v>|^2 == <u,u><v,v>.
inline bool projectively_equal(const ExactVector& u, const ExactVector& v) {
  Cyclotomic s = inner(u, v);
  return s * s.conj() == inner(u, u) * inner(v, v);
}

}  // namespace magicpovm

#endif  // MAGICPOVM_PERMUTATION_HPP
