// Copyright 2026 The photonq authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace photonq {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kAmplitudePruneCutoff = 1e-14;

enum class Statistics : std::uint8_t { Boson, Fermion };

/// Internal degree of freedom carried by a mode. The multiport never touches
/// it; polarizing elements and label rotations do.
enum class Label : std::uint8_t { None, Plus, Minus, H, V, Early, Late };

const char* label_name(Label l);

/// One mode of the field: a spatial port plus an internal label. Total order
/// is lexicographic on (port, label); all fermionic sign conventions are
/// defined relative to this order.
struct ModeIndex {
  int port = 1;
  Label label = Label::None;

  friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;
};

/// Occupation-number basis state. Zero-occupation entries are never stored;
/// fermionic occupations are restricted to {0, 1}.
class FockState {
 public:
  explicit FockState(Statistics s = Statistics::Boson) : stats_(s) {}
  FockState(Statistics s, std::vector<std::pair<ModeIndex, int>> occupations);

  Statistics statistics() const { return stats_; }
  int occupation(ModeIndex m) const;
  int total_particles() const;
  bool is_vacuum() const { return occ_.empty(); }

  /// Sorted (mode, count) pairs, counts > 0.
  const std::vector<std::pair<ModeIndex, int>>& occupations() const {
    return occ_;
  }

  /// Particles per spatial port, summed over labels.
  std::map<int, int> port_counts() const;

  friend auto operator<=>(const FockState&, const FockState&) = default;

 private:
  friend class PureState;
  std::vector<std::pair<ModeIndex, int>> occ_;
  Statistics stats_;
};

/// Finite superposition of FockStates sharing one statistics tag. All terms
/// have equal total particle number unless the state is the vacuum or the
/// zero vector (empty term list). Values are immutable in spirit: every
/// operation returns a fresh state.
class PureState {
 public:
  explicit PureState(Statistics s = Statistics::Boson) : stats_(s) {}

  static PureState vacuum(Statistics s = Statistics::Boson);
  static PureState zero(Statistics s = Statistics::Boson);

  /// Single normalized basis term.
  static PureState basis(const FockState& f, Complex amplitude = 1.0);

  Statistics statistics() const { return stats_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<FockState, Complex>& terms() const { return terms_; }
  Complex amplitude(const FockState& f) const;
  bool normalized() const { return normalized_; }

  double squared_norm() const;
  PureState normalize() const;

  /// Drops terms with |amplitude| below the prune cutoff.
  PureState pruned(double cutoff = kAmplitudePruneCutoff) const;

  PureState operator+(const PureState& other) const;
  PureState operator*(Complex scale) const;

  /// One line per term: "re im : port.label^n port.label^n ...".
  std::string serialize() const;
  static PureState deserialize(const std::string& text, Statistics s);

  /// Mutating accumulation, used by the builders in this header.
  void add_term(const FockState& f, Complex amplitude);
  void set_normalized(bool flag) { normalized_ = flag; }

 private:
  std::map<FockState, Complex> terms_;
  Statistics stats_;
  bool normalized_ = false;
};

/// Canonical ladder operator. Bosons pick up sqrt(n+1); fermions on an
/// occupied mode delete the term, otherwise they acquire the sign
/// (-1)^(number of occupied modes strictly preceding `mode`).
PureState apply_creation(const PureState& state, ModeIndex mode);

/// Conjugate-linear in the first argument.
Complex inner_product(const PureState& a, const PureState& b);

/// Tensor product of states over disjoint mode sets; fermionic interleaving
/// signs follow the canonical order.
PureState tensor(const PureState& a, const PureState& b);

/// One output branch of a mode substitution: a creation operator on the
/// source mode becomes sum_k coefficient_k * creation(target_k).
struct ModeImage {
  ModeIndex target;
  Complex coefficient;
};

using ModeMap = std::function<std::span<const ModeImage>(ModeIndex)>;

inline constexpr std::size_t kTermBudget = 10'000'000;

/// Substitutes every creation operator by its image and re-expands. This is
/// the one engine behind multiport scattering, polarizing beam splitters and
/// label rotations. Throws std::length_error past the term budget.
PureState apply_linear_map(const PureState& state, const ModeMap& map,
                           std::size_t term_budget = kTermBudget);

/// Contracts the modes selected by `take` against `reference` (conjugated),
/// returning the unnormalized remainder state on the untouched modes.
/// For split terms f = f_taken (x) f_rest the remainder picks up
/// <reference|f_taken> times the interleaving sign for fermions.
PureState partial_contract(const PureState& state, const PureState& reference,
                           const std::function<bool(ModeIndex)>& take);

}  // namespace photonq
