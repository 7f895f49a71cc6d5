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

// Magic-group search: pairs of gates, their groups, candidate states, IC verdicts.

#ifndef MAGICPOVM_SEARCH_HPP
#define MAGICPOVM_SEARCH_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "magicpovm/permutation.hpp"
#include "magicpovm/povm.hpp"
#include "magicpovm/report.hpp"

namespace magicpovm {

/// Qudit factorization used when only a dimension is given: prime factors with
/// multiplicity, except 6, which is treated as a single six-level system.
inline PauliSpec default_spec(std::size_t d) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  if (d == 6) return PauliSpec({6}, PhaseRule::bare);
  std::vector<int> f;
  std::size_t n = d;
  for (std::size_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      f.push_back(static_cast<int>(p));
      n /= p;
    }
  if (n > 1) f.push_back(static_cast<int>(n));
  bool weyl_ok = true;
  for (int x : f) weyl_ok = weyl_ok && (x == 2 || x % 2 == 1);
  return PauliSpec(f, weyl_ok ? PhaseRule::weyl : PhaseRule::bare);
}

struct SearchOptions {
  std::size_t dimension = 3;
  PauliSpec spec{std::vector<int>{3}};
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::size_t order_cap = 2000;
  int combo_depth = 1;
  bool exhaustive = false;
  bool relaxed = false;  // allow generators that are not magic gates
};

namespace detail {

inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = rng.max() - rng.max() % n;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % n;
}

inline PermGate random_gate(std::mt19937_64& rng, int d, bool magic) {
  for (;;) {
    std::vector<int> image(static_cast<std::size_t>(d));
    std::iota(image.begin(), image.end(), 0);
    for (int i = d - 1; i > 0; --i) std::swap(image[static_cast<std::size_t>(i)], image[draw_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    PermGate p(image);
    if (!magic || is_magic_gate(p)) return p;
  }
}

inline std::vector<PermGate> all_gates(int d, bool magic) {
  std::vector<int> image(static_cast<std::size_t>(d));
  std::iota(image.begin(), image.end(), 0);
  std::vector<PermGate> out;
  do {
    PermGate p(image);
    if (!magic || is_magic_gate(p)) out.push_back(p);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace detail

/// Report: distinct groups met, and each distinct candidate state with its IC verdict.
/// Output depends only on the options (the RNG is mt19937_64 with an explicit draw).
inline Json run_search(const SearchOptions& o) {
  if (o.dimension < 3) throw std::invalid_argument("search needs dimension at least 3");
  if (o.spec.dimension() != o.dimension) throw std::invalid_argument("Pauli spec does not match the dimension");
  const int d = static_cast<int>(o.dimension);

  std::vector<std::pair<PermGate, PermGate>> pairs;
  if (o.exhaustive) {
    auto gates = detail::all_gates(d, !o.relaxed);
    for (std::size_t a = 0; a < gates.size(); ++a)
      for (std::size_t b = a + 1; b < gates.size(); ++b) pairs.emplace_back(gates[a], gates[b]);
  } else {
    std::mt19937_64 rng(o.seed);
    for (std::size_t s = 0; s < o.samples; ++s) {
      PermGate a = detail::random_gate(rng, d, !o.relaxed);
      PermGate b = detail::random_gate(rng, d, !o.relaxed);
      pairs.emplace_back(a, b);
    }
  }

  std::set<std::vector<PermGate>> seen_groups;
  std::vector<MagicGroup> groups;
  std::size_t capped = 0;
  for (const auto& [a, b] : pairs) {
    MagicGroup g;
    try {
      g = generate_group(a, b, o.order_cap);
    } catch (const GroupCapExceeded&) {
      ++capped;
      continue;
    }
    std::vector<PermGate> key = g.elements;
    std::sort(key.begin(), key.end());
    if (seen_groups.insert(std::move(key)).second) groups.push_back(std::move(g));
  }

  Json jgroups = Json::array();
  Json jstates = Json::array();
  std::vector<ExactVector> found;
  std::size_t ic = 0;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& g = groups[gi];
    auto cands = candidate_states(g, o.combo_depth, o.spec);
    Json orders = Json::object();
    for (auto [k, v] : g.fingerprint.element_orders) orders[std::to_string(k)] = v;
    jgroups.push_back({{"generators", {to_string(g.g1), to_string(g.g2)}},
                       {"order", g.fingerprint.order},
                       {"element_orders", orders},
                       {"candidates", cands.size()}});
    for (const auto& c : cands) {
      bool dup = false;
      for (const auto& f : found) {
        const int m = std::lcm(f.conductor(), c.vector.conductor());
        if (projectively_equal(f.embedded(m), c.vector.embedded(m))) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
      found.push_back(c.vector);
      Povm p = build_povm(Fiducial::from_vector(c.vector, o.spec));
      const bool is_ic = p.informationally_complete();
      ic += is_ic;
      jstates.push_back({{"state", to_json(c.vector)},
                         {"group", gi},
                         {"source", to_string(c.source)},
                         {"eigenvalue", to_string(c.eigenvalue)},
                         {"gram_rank", p.gram_rank()},
                         {"ic", is_ic},
                         {"classification", p.classification().str()}});
    }
  }
  Json r;
  r["dimension"] = o.dimension;
  r["factors"] = o.spec.factors;
  r["mode"] = o.exhaustive ? "exhaustive" : "sampled";
  if (!o.exhaustive) r["seed"] = o.seed;
  r["pairs"] = pairs.size();
  r["capped"] = capped;
  r["groups"] = std::move(jgroups);
  r["states"] = std::move(jstates);
  r["ic_states"] = ic;
  return r;
}

}  // namespace magicpovm

#endif  // MAGICPOVM_SEARCH_HPP
