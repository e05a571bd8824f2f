#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wfs/enumeration.hpp"

namespace wfs {

enum class SystemKind { Set, Pointed, Vect };

std::string to_string(SystemKind k);
std::optional<SystemKind> parse_system_kind(const std::string& s);

/// Predicate flags of a morphism; meaning depends on the SystemKind.
namespace flags {
// Set
inline constexpr unsigned kInjective = 1;
inline constexpr unsigned kSurjective = 2;
inline constexpr unsigned kDomainEmpty = 4;
// Pointed sets
inline constexpr unsigned kPointedSurjective = 1;
inline constexpr unsigned kBaseFiberTrivial = 2;
inline constexpr unsigned kInjectiveOffBaseFiber = 4;
// Vector spaces
inline constexpr unsigned kMono = 1;
inline constexpr unsigned kEpi = 2;
}  // namespace flags

/// Every flag combination the kind can name, in canonical universe order.
std::vector<unsigned> canonical_flag_order(SystemKind k);
/// Set: ISO_E ISO_N MONO_E MONO_N EPI GEN. Vect: ISO MONO EPI GEN.
/// Pointed: three letters S/B/O for surjective, basepoint fiber trivial,
/// injective off the basepoint fiber; uppercase when the flag holds.
std::string archetype_name(SystemKind k, unsigned flag_bits);
std::optional<unsigned> archetype_flags(SystemKind k, const std::string& name);
bool flags_are_iso(SystemKind k, unsigned flag_bits);

/// Subset of an archetype universe (at most 32 archetypes).
class ArchetypeClass {
 public:
  constexpr ArchetypeClass() = default;
  constexpr explicit ArchetypeClass(std::uint32_t bits) : bits_(bits) {}

  static ArchetypeClass full(int n) { return ArchetypeClass(n >= 32 ? ~0u : (1u << n) - 1u); }

  std::uint32_t bits() const { return bits_; }
  bool contains(int a) const { return (bits_ >> a) & 1u; }
  void insert(int a) { bits_ |= 1u << a; }
  void erase(int a) { bits_ &= ~(1u << a); }
  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool is_subset_of(ArchetypeClass o) const { return (bits_ & ~o.bits_) == 0; }
  std::vector<int> members() const {
    std::vector<int> out;
    for (auto b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }
  int first_difference(ArchetypeClass o) const {
    auto d = bits_ ^ o.bits_;
    return d ? std::countr_zero(d) : -1;
  }

  friend ArchetypeClass operator&(ArchetypeClass a, ArchetypeClass b) { return ArchetypeClass(a.bits_ & b.bits_); }
  friend ArchetypeClass operator|(ArchetypeClass a, ArchetypeClass b) { return ArchetypeClass(a.bits_ | b.bits_); }
  friend ArchetypeClass operator-(ArchetypeClass a, ArchetypeClass b) { return ArchetypeClass(a.bits_ & ~b.bits_); }
  friend bool operator==(ArchetypeClass, ArchetypeClass) = default;
  friend auto operator<=>(ArchetypeClass, ArchetypeClass) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// An archetype pair whose concrete instances disagree on lifting.
struct NonUniformPair {
  int left = 0;
  int right = 0;
  /// Instance names of a lifting pair and a non-lifting pair.
  std::string lifting_example;
  std::string failing_example;

  friend bool operator==(const NonUniformPair&, const NonUniformPair&) = default;
};

/// Scan output behind an ArchetypeSystem; also the on-disk table content.
struct DerivedTables {
  SystemKind kind = SystemKind::Set;
  /// Largest object scanned for composites and factorizations.
  int bound = 0;
  /// Largest object scanned for lifting.
  int lifting_bound = 0;
  /// Smallest b such that every bound in [b, bound] gives the same
  /// composite/factorization tables.
  int stable_since = 0;
  int lifting_stable_since = 0;
  /// Flags of each archetype, canonical order.
  std::vector<unsigned> universe;
  /// lifts[l][r]
  std::vector<std::vector<bool>> lifts;
  /// composites[a][b]: archetypes realized by some (a then b) composite.
  std::vector<std::vector<std::vector<int>>> composites;
  /// factorizations[t]: (a, b) such that every scanned instance of t is b ∘ a
  /// for some a-instance and b-instance.
  std::vector<std::vector<std::pair<int, int>>> factorizations;
  std::vector<NonUniformPair> non_uniform;

  friend bool operator==(const DerivedTables&, const DerivedTables&) = default;
};

/// Missing, stale or inconsistent derived tables.
class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Archetype {
  std::string name;
  unsigned flags = 0;
  bool iso = false;
};

/// Finite universe of morphism archetypes with lifting, composition and
/// factorization tables. Immutable.
class ArchetypeSystem {
 public:
  /// Uses the lifting table as given. Throws TableError if the tables record
  /// non-uniform lifting.
  explicit ArchetypeSystem(DerivedTables tables);

  SystemKind kind() const { return tables_.kind; }
  int size() const { return static_cast<int>(universe_.size()); }
  const Archetype& archetype(int a) const { return universe_[static_cast<std::size_t>(a)]; }
  const std::vector<Archetype>& universe() const { return universe_; }
  std::optional<int> find(const std::string& name) const;
  /// Throws std::out_of_range for unknown names.
  int index(const std::string& name) const;
  std::optional<int> find_flags(unsigned flag_bits) const;

  bool lifts(int left, int right) const { return right_of_[static_cast<std::size_t>(left)].contains(right); }
  ArchetypeClass right_of(int left) const { return right_of_[static_cast<std::size_t>(left)]; }
  ArchetypeClass left_of(int right) const { return left_of_[static_cast<std::size_t>(right)]; }
  ArchetypeClass composites(int first, int second) const {
    return comp_[static_cast<std::size_t>(first * size() + second)];
  }
  const std::vector<std::pair<int, int>>& factorizations(int t) const {
    return tables_.factorizations[static_cast<std::size_t>(t)];
  }

  ArchetypeClass all() const { return ArchetypeClass::full(size()); }
  ArchetypeClass isos() const;
  ArchetypeClass make_class(const std::vector<std::string>& names) const;

  /// The fixed named classes of the kind (bij, inj, surj, ...), in display
  /// preference order.
  const std::vector<std::pair<std::string, ArchetypeClass>>& named_classes() const { return named_; }
  /// Throws std::out_of_range for unknown names.
  ArchetypeClass named(const std::string& name) const;
  /// Preferred name, or "{A, B, ...}" when the class has none.
  std::string class_name(ArchetypeClass c) const;
  /// Archetype names in universe order.
  std::vector<std::string> member_names(ArchetypeClass c) const;

  const DerivedTables& tables() const { return tables_; }
  /// Copy with one lifting entry replaced; used for fault injection.
  ArchetypeSystem with_lifting(int left, int right, bool value) const;

 private:
  DerivedTables tables_;
  std::vector<Archetype> universe_;
  std::vector<ArchetypeClass> right_of_;
  std::vector<ArchetypeClass> left_of_;
  std::vector<ArchetypeClass> comp_;
  std::vector<std::pair<std::string, ArchetypeClass>> named_;
};

/// Lifting in Set in terms of flags: (left has non-empty domain and right has
/// empty domain) or (one side injective and one side surjective).
bool set_lifting_predicate(unsigned left_flags, unsigned right_flags);

/// Set system: lifting from set_lifting_predicate, composites and
/// factorizations from the checked-in tables. Throws TableError if the
/// tables are missing, stale, or their scanned lifting disagrees with the
/// predicate.
ArchetypeSystem set_system();
ArchetypeSystem pointed_system();
ArchetypeSystem vect_system();
ArchetypeSystem system_for(SystemKind k);
/// Builds a system from tables, applying the Set predicate when kind == Set.
ArchetypeSystem make_system(DerivedTables tables);

/// Invariant violations (identity archetypes lift against everything,
/// every archetype factors, isos are composition units).
std::vector<std::string> validate_system(const ArchetypeSystem& sys);

struct Orthogonals {
  ArchetypeClass left;
  ArchetypeClass right;
};

ArchetypeClass right_orthogonal(const ArchetypeSystem& sys, ArchetypeClass s);
ArchetypeClass left_orthogonal(const ArchetypeSystem& sys, ArchetypeClass s);
Orthogonals orthogonals(const ArchetypeSystem& sys, ArchetypeClass s);

/// Archetypes realized by some composite (first then `then`).
ArchetypeClass composites(const ArchetypeSystem& sys, ArchetypeClass first, ArchetypeClass then);
/// Archetypes all of whose instances factor as first then `then`.
ArchetypeClass factorable(const ArchetypeSystem& sys, ArchetypeClass first, ArchetypeClass then);
std::optional<int> unfactorable_archetype(const ArchetypeSystem& sys, ArchetypeClass left, ArchetypeClass right);

struct ArchetypeWfs {
  ArchetypeClass left;
  ArchetypeClass right;

  friend bool operator==(const ArchetypeWfs&, const ArchetypeWfs&) = default;
  friend auto operator<=>(const ArchetypeWfs&, const ArchetypeWfs&) = default;
};

struct ArchetypeModelStructure {
  ArchetypeClass cofibrations;
  ArchetypeClass fibrations;
  ArchetypeClass weak_equivalences;
  std::size_t lower = 0;
  std::size_t upper = 0;

  ArchetypeClass acyclic_cofibrations() const { return cofibrations & weak_equivalences; }
  ArchetypeClass acyclic_fibrations() const { return fibrations & weak_equivalences; }
};

/// A realizable composable triple (first, second, composite ∈ comp(first, second)).
struct ArchetypeTriple {
  int first = 0;
  int second = 0;
  int composite = 0;

  friend bool operator==(const ArchetypeTriple&, const ArchetypeTriple&) = default;
};

struct ArchetypeRejection {
  std::size_t lower = 0;
  std::size_t upper = 0;
  FailedCheck failed = FailedCheck::TwoOfThree;
  ArchetypeClass weak_equivalences;
  /// One archetype for class mismatches; (first, second, composite) for 2-out-of-3.
  std::vector<int> witness;
};

struct ArchetypeModelSearch {
  std::vector<ArchetypeWfs> wfs;
  std::vector<ArchetypeModelStructure> structures;
  std::vector<ArchetypeRejection> rejections;
};

/// All (L, R) over the 2^n subsets with L = ^⧄R, R = L^⧄ and every archetype
/// factoring L-then-R; sorted by L.
std::vector<ArchetypeWfs> enumerate_wfs(const ArchetypeSystem& sys);
ArchetypeModelSearch enumerate_model_structures(const ArchetypeSystem& sys);
std::vector<std::pair<std::size_t, std::size_t>> wfs_hasse(const std::vector<ArchetypeWfs>& systems);

/// Search order: first ∉ W, then second ∉ W, then composite ∉ W; archetypes
/// in universe order.
std::optional<ArchetypeTriple> two_of_three_violation(const ArchetypeSystem& sys, ArchetypeClass w);
std::vector<ArchetypeTriple> two_of_three_violations(const ArchetypeSystem& sys, ArchetypeClass w);

}  // namespace wfs
