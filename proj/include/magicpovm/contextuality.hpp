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

// Operator-level Kochen-Specker certificates. Each line is an ordered list of
// Weyl operators whose product is a scalar; the product of those scalars is
// compared with the value side, where every operator carries a g-th root of
// unity and appears a multiple of g times.

#ifndef MAGICPOVM_CONTEXTUALITY_HPP
#define MAGICPOVM_CONTEXTUALITY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "magicpovm/geometry.hpp"
#include "magicpovm/pauli.hpp"

namespace magicpovm {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KSPoint {
  std::string label;
  WeylOperator op;
};

struct KSLine {
  std::vector<std::string> order;  // point labels, multiplied left to right
  std::optional<Cyclotomic> expected_phase;
};

struct KSCertificate {
  PauliSpec spec;
  std::vector<KSPoint> points;
  std::vector<KSLine> lines;
  int value_group_order = 2;
};

enum class ProofStrength { commuting_contexts, operator_level };

inline std::string to_string(ProofStrength s) {
  return s == ProofStrength::commuting_contexts ? "commuting_contexts" : "operator_level";
}

struct KSVerdict {
  std::vector<Cyclotomic> line_phases;
  std::vector<bool> line_expected_ok;     // true where no expectation was given
  std::vector<bool> line_commuting;
  Cyclotomic global_phase{1};             // operator side
  std::optional<Cyclotomic> value_side;   // 1 when the counting argument applies
  std::map<std::string, std::size_t> multiplicity;
  bool multiplicities_divisible = false;
  bool operator_orders_ok = false;        // O^g = I for every point
  bool expectations_met = false;
  bool contradiction = false;
  ProofStrength proof_strength = ProofStrength::operator_level;
};

namespace detail {

inline WeylOperator power(const WeylOperator& op, int e) {
  WeylOperator acc = WeylOperator::identity(op.spec());
  for (int k = 0; k < e; ++k) acc = acc * op;
  return acc;
}

inline bool commute(const WeylOperator& a, const WeylOperator& b) { return a * b == b * a; }

}  // namespace detail

inline KSVerdict verify(const KSCertificate& c) {
  if (c.value_group_order < 1) throw CertificateError("value group order must be positive");
  std::map<std::string, const WeylOperator*> by_label;
  for (const auto& p : c.points) {
    if (!(p.op.spec() == c.spec)) throw CertificateError("point " + p.label + " uses a different Pauli spec");
    if (!by_label.emplace(p.label, &p.op).second) throw CertificateError("duplicate point label " + p.label);
  }
  KSVerdict v;
  for (const auto& p : c.points) v.multiplicity[p.label] = 0;
  v.expectations_met = true;
  bool all_commuting = true;
  for (std::size_t l = 0; l < c.lines.size(); ++l) {
    std::vector<WeylOperator> ops;
    for (const auto& name : c.lines[l].order) {
      auto it = by_label.find(name);
      if (it == by_label.end()) throw CertificateError("line " + std::to_string(l) + " names unknown point " + name);
      ops.push_back(*it->second);
      ++v.multiplicity[name];
    }
    auto phase = product_phase(ops);
    if (!phase) throw CertificateError("line " + std::to_string(l) + " product is not proportional to the identity");
    bool commuting = true;
    for (std::size_t a = 0; a < ops.size(); ++a)
      for (std::size_t b = a + 1; b < ops.size(); ++b) commuting = commuting && detail::commute(ops[a], ops[b]);
    all_commuting = all_commuting && commuting;
    const bool ok = !c.lines[l].expected_phase || *c.lines[l].expected_phase == *phase;
    v.expectations_met = v.expectations_met && ok;
    v.global_phase *= *phase;
    v.line_phases.push_back(*phase);
    v.line_expected_ok.push_back(ok);
    v.line_commuting.push_back(commuting);
  }
  v.multiplicities_divisible = true;
  for (const auto& [name, m] : v.multiplicity)
    if (m % static_cast<std::size_t>(c.value_group_order) != 0) v.multiplicities_divisible = false;
  v.operator_orders_ok = true;
  for (const auto& p : c.points) {
    WeylOperator g = detail::power(p.op, c.value_group_order);
    if (!(g.is_identity_class() && g.phase().is_one())) v.operator_orders_ok = false;
  }
  if (v.multiplicities_divisible && v.operator_orders_ok) v.value_side = Cyclotomic(1);
  v.contradiction = v.value_side.has_value() && !v.global_phase.is_one();
  v.proof_strength = all_commuting ? ProofStrength::commuting_contexts : ProofStrength::operator_level;
  return v;
}

enum class Orientation {
  witness,        // the ordering recorded on each block
  nontrivial,     // witness orderings, with the last reorderable line changed so the
                  // product of line phases is zeta_g (or at least not 1) when possible
};

namespace detail {

inline std::vector<std::pair<std::vector<std::size_t>, Cyclotomic>> orderings_with_phase(const Povm& p, std::vector<std::size_t> idx) {
  std::vector<std::pair<std::vector<std::size_t>, Cyclotomic>> out;
  std::sort(idx.begin(), idx.end());
  do {
    std::vector<WeylOperator> ops;
    for (std::size_t i : idx) ops.push_back(p.labels()[i]);
    auto s = product_phase(ops);
    if (s) out.emplace_back(idx, *s);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace detail

/// Packages witnessed blocks as a certificate. Points are named by their
/// phase-free operator label and carry the orbit's coset representative.
inline KSCertificate certificate_from_geometry(const IncidenceStructure& s, const Povm& p,
                                               Orientation orientation = Orientation::witness) {
  KSCertificate c;
  c.spec = p.spec();
  c.value_group_order = 1;
  for (int f : c.spec.factors) c.value_group_order = std::lcm(c.value_group_order, f);
  for (std::size_t k = 0; k < s.points.size(); ++k) c.points.push_back({s.point_labels[k], p.labels().at(s.points[k])});
  std::vector<std::pair<std::vector<std::size_t>, Cyclotomic>> chosen;
  for (const auto& b : s.lines) {
    if (!b.op_phase || b.witness.empty()) throw CertificateError("a block has no operator-product witness");
    chosen.emplace_back(b.witness, *b.op_phase);
  }
  if (orientation == Orientation::nontrivial) {
    Cyclotomic global(1);
    for (const auto& ch : chosen) global *= ch.second;
    const Cyclotomic target = Cyclotomic::zeta(c.value_group_order, 1);
    // Prefer a single reordering that lands on zeta_g; otherwise anything but 1.
    for (int pass = 0; pass < 2 && global.is_one(); ++pass) {
      for (std::size_t l = s.lines.size(); l-- > 0 && global.is_one();) {
        const Cyclotomic rest = global / chosen[l].second;
        for (const auto& o : detail::orderings_with_phase(p, s.lines[l].indices)) {
          const Cyclotomic g = rest * o.second;
          if (pass == 0 ? g == target : !g.is_one()) {
            chosen[l] = o;
            global = g;
            break;
          }
        }
      }
    }
  }
  for (const auto& [order, phase] : chosen) {
    KSLine line;
    for (std::size_t i : order) line.order.push_back(s.point_labels[s.point_position(i)]);
    line.expected_phase = phase;
    c.lines.push_back(std::move(line));
  }
  return c;
}

}  // namespace magicpovm

#endif  // MAGICPOVM_CONTEXTUALITY_HPP
