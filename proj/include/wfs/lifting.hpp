#pragma once

#include <optional>
#include <vector>

#include "wfs/fincat.hpp"
#include "wfs/morphism_class.hpp"
#include "wfs/set_function.hpp"

namespace wfs {

/// A square of morphism ids in a FiniteCategory:
///
///   A --top--> X
///   |          |
///  left      right
///   v          v
///   B -bottom> Y
struct CatSquare {
  int left = 0;
  int right = 0;
  int top = 0;
  int bottom = 0;
};

bool commutes(const FiniteCategory& cat, const CatSquare& sq);

/// Searches hom(B, X) for a diagonal. Throws std::invalid_argument if the
/// square does not commute.
bool has_filler(const FiniteCategory& cat, const CatSquare& sq);

/// left ⧄ right: every commuting square with these sides has a filler
/// (vacuously true when there are none).
bool lifts(const FiniteCategory& cat, int left, int right);

/// The full ⧄ relation of a category, computed once.
class LiftingRelation {
 public:
  explicit LiftingRelation(const FiniteCategory& cat);

  std::size_t morphism_count() const { return right_of_.size(); }
  bool lifts(int left, int right) const { return right_of_[static_cast<std::size_t>(left)].contains(right); }
  /// {left}^⧄
  const MorphismClass& right_of(int left) const { return right_of_[static_cast<std::size_t>(left)]; }
  /// ^⧄{right}
  const MorphismClass& left_of(int right) const { return left_of_[static_cast<std::size_t>(right)]; }

  MorphismClass right_orthogonal(const MorphismClass& s) const;
  MorphismClass left_orthogonal(const MorphismClass& s) const;

 private:
  std::vector<MorphismClass> right_of_;
  std::vector<MorphismClass> left_of_;
};

MorphismClass right_orthogonal(const FiniteCategory& cat, const MorphismClass& s);
MorphismClass left_orthogonal(const FiniteCategory& cat, const MorphismClass& s);

/// A lifting problem between concrete finite functions:
///
///   A --top--> X
///   |          |
///  left      right
///   v          v
///   B -bottom> Y
struct LiftingSquare {
  SetFunction left;
  SetFunction right;
  SetFunction top;
  SetFunction bottom;

  bool well_typed() const;
  bool commutes() const;
};

struct FillerConditions {
  /// top is constant on every fiber of left.
  bool fibers_collapsed = false;
  /// every point in the image of bottom has a non-empty fiber under right.
  bool fibers_nonempty = false;

  bool both() const { return fibers_collapsed && fibers_nonempty; }
};

FillerConditions filler_conditions(const LiftingSquare& sq);

/// Builds the diagonal directly: a point with a non-empty fiber under `left`
/// goes to top's common value on that fiber; any other point b goes to the
/// least element of right^-1(bottom(b)). Empty iff the conditions fail.
std::optional<SetFunction> construct_filler(const LiftingSquare& sq);

}  // namespace wfs
