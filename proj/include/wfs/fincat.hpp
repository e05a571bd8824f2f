#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wfs/morphism_class.hpp"
#include "wfs/set_function.hpp"

namespace wfs {

struct Morphism {
  std::string name;
  int src = 0;
  int dst = 0;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// A finite category with a fully materialized composition table.
///
/// Objects and morphisms are dense integer ids in input order. The table is
/// indexed [first * morphism_count + second] and holds `second ∘ first`, or
/// kNoComposite when the pair is not composable (or the entry is missing, which
/// `validate` reports). Immutable after construction.
class FiniteCategory {
 public:
  static constexpr int kNoComposite = -1;

  FiniteCategory() = default;
  FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms, std::vector<int> identities,
                 std::vector<int> composition);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(int o) const { return objects_[static_cast<std::size_t>(o)]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const Morphism& morphism(int m) const { return morphisms_[static_cast<std::size_t>(m)]; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  int src(int m) const { return morphism(m).src; }
  int dst(int m) const { return morphism(m).dst; }
  int identity(int o) const { return identities_[static_cast<std::size_t>(o)]; }
  const std::vector<int>& identities() const { return identities_; }
  const std::vector<int>& composition_table() const { return composition_; }

  /// `second ∘ first`, or kNoComposite.
  int compose(int first, int second) const {
    return composition_[static_cast<std::size_t>(first) * morphisms_.size() + static_cast<std::size_t>(second)];
  }

  std::span<const int> hom(int a, int b) const {
    return hom_[static_cast<std::size_t>(a) * objects_.size() + static_cast<std::size_t>(b)];
  }

  bool is_identity(int m) const { return identity(src(m)) == m; }
  std::optional<int> find_morphism(const std::string& name) const;
  std::optional<int> find_object(const std::string& name) const;

  MorphismClass all_morphisms() const { return MorphismClass::full(morphisms_.size()); }
  MorphismClass identity_class() const;
  MorphismClass isomorphisms() const;
  MorphismClass make_class(const std::vector<int>& members) const {
    return MorphismClass::of(morphisms_.size(), members);
  }

  /// Names of the members, in id order.
  std::vector<std::string> member_names(const MorphismClass& c) const;

  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
    return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ && a.identities_ == b.identities_ &&
           a.composition_ == b.composition_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::vector<int> composition_;
  std::vector<std::vector<int>> hom_;
  std::unordered_map<std::string, int> morphism_index_;
};

struct Violation {
  std::string message;
  /// Morphisms involved (a pair or triple for composition faults).
  std::vector<int> morphisms;
};

/// Empty iff every category invariant holds.
std::vector<Violation> validate(const FiniteCategory& cat);

FiniteCategory terminal_category();
FiniteCategory discrete_category(int objects);
/// Objects 0..n with one morphism i -> j whenever i <= j.
FiniteCategory chain_poset(int n);
FiniteCategory product(const FiniteCategory& c1, const FiniteCategory& c2);
/// Same ids and names; src/dst swapped and composition reversed.
FiniteCategory opposite(const FiniteCategory& cat);

/// One object per cardinality 0..max_card, every function between them.
struct SetSkeleton {
  FiniteCategory category;
  /// The function behind each morphism id.
  std::vector<SetFunction> functions;
};

SetSkeleton set_skeleton(int max_card);

}  // namespace wfs
