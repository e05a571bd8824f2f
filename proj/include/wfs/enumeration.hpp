#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wfs/fincat.hpp"
#include "wfs/lifting.hpp"
#include "wfs/morphism_class.hpp"

namespace wfs {

/// A weak factorization system (L, R).
struct Wfs {
  MorphismClass left;
  MorphismClass right;

  friend bool operator==(const Wfs&, const Wfs&) = default;
  friend auto operator<=>(const Wfs&, const Wfs&) = default;
};

/// (C, F, W) together with the indices of its two constituent systems in the
/// accompanying Wfs list: lower = (C∩W, F), upper = (C, F∩W).
struct ModelStructure {
  MorphismClass cofibrations;
  MorphismClass fibrations;
  MorphismClass weak_equivalences;
  std::size_t lower = 0;
  std::size_t upper = 0;

  MorphismClass acyclic_cofibrations() const { return cofibrations & weak_equivalences; }
  MorphismClass acyclic_fibrations() const { return fibrations & weak_equivalences; }
};

enum class FailedCheck {
  /// L1 != C ∩ W
  AcyclicCofibrations,
  /// R2 != F ∩ W
  AcyclicFibrations,
  TwoOfThree,
  /// Archetype engine only: the composite-based and factorization-based
  /// weak equivalences disagree.
  NonUniformWeakEquivalences,
};

std::string to_string(FailedCheck c);

/// A pair of systems (lower ⊆ upper) that did not yield a model structure.
/// For class mismatches the witness is one morphism in the symmetric
/// difference; for 2-out-of-3 it is (first, second, second∘first).
struct Rejection {
  std::size_t lower = 0;
  std::size_t upper = 0;
  FailedCheck failed = FailedCheck::TwoOfThree;
  MorphismClass weak_equivalences;
  std::vector<int> witness;
};

struct ModelStructureSearch {
  std::vector<Wfs> wfs;
  std::vector<ModelStructure> structures;
  std::vector<Rejection> rejections;
};

/// A composable pair with exactly two of {first, second, second∘first} in W.
struct TwoOfThreeWitness {
  int first = 0;
  int second = 0;
  int composite = 0;
};

/// Looks for violations in the order: first ∉ W, then second ∉ W, then
/// composite ∉ W; ties broken by (first, second) id order.
std::optional<TwoOfThreeWitness> two_of_three_violation(const FiniteCategory& cat, const MorphismClass& w);

/// { r ∘ l : l ∈ first, r ∈ then, composable }
MorphismClass composites(const FiniteCategory& cat, const MorphismClass& first, const MorphismClass& then);

/// A morphism with no factorization r ∘ l (l ∈ left, r ∈ right), if any.
std::optional<int> unfactorable_morphism(const FiniteCategory& cat, const MorphismClass& left,
                                         const MorphismClass& right);

/// Intersection closure of {{m}^⧄ : m} ∪ {Mor}, sorted.
std::vector<MorphismClass> closed_right_classes(const LiftingRelation& rel);
std::vector<MorphismClass> closed_right_classes(const FiniteCategory& cat);

/// All weak factorization systems, sorted by left class.
std::vector<Wfs> enumerate_wfs(const FiniteCategory& cat, const LiftingRelation& rel);
std::vector<Wfs> enumerate_wfs(const FiniteCategory& cat);

ModelStructureSearch enumerate_model_structures(const FiniteCategory& cat);

/// Cover edges of the systems ordered by inclusion of left classes.
std::vector<std::pair<std::size_t, std::size_t>> wfs_hasse(const std::vector<Wfs>& systems);

bool closed_under_composition(const FiniteCategory& cat, const MorphismClass& k);

/// Closed under retracts in the arrow category, checked by searching all
/// retraction data (i, r, j, s) between each pair of morphisms.
bool closed_under_retracts(const FiniteCategory& cat, const MorphismClass& k);

}  // namespace wfs
