#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wfs/archetypes.hpp"
#include "wfs/enumeration.hpp"
#include "wfs/fincat.hpp"

namespace wfs {

/// Largest bound `instances` accepts per kind (cardinality for sets and
/// pointed sets, counting the basepoint; dimension over F2 for Vect).
int max_instance_bound(SystemKind k);
int min_instance_bound(SystemKind k);
/// Largest bound the table derivations accept. Set and pointed derivations
/// enumerate maps up to automorphism and so reach past max_instance_bound.
int max_derivation_bound(SystemKind k);

/// Every morphism between canonical objects up to a bound, as a category.
/// Morphisms are ordered by (domain size, codomain size, value vector).
struct InstanceCategory {
  SystemKind kind = SystemKind::Set;
  int bound = 0;
  FiniteCategory category;
  /// Archetype flags of each morphism.
  std::vector<unsigned> flags;
};

/// Throws std::out_of_range("bound too large") past max_instance_bound and
/// std::invalid_argument below min_instance_bound.
InstanceCategory instances(SystemKind k, int bound);

/// Exhaustive ⧄ check: enumerates every commuting square and, for each, every
/// diagonal making the lower triangle commute, looking for one that also makes
/// the upper triangle commute.
bool lifts_bruteforce(const FiniteCategory& cat, int left, int right);

struct LiftingMismatch {
  std::string left;
  std::string right;
  bool scanned = false;
  bool predicted = false;
};

struct LiftingReport {
  std::size_t pairs_scanned = 0;
  std::vector<LiftingMismatch> mismatches;
  /// Instance archetypes missing from the system's universe.
  std::vector<std::string> unknown_archetypes;
  std::vector<NonUniformPair> non_uniform;

  bool clean() const { return mismatches.empty() && unknown_archetypes.empty() && non_uniform.empty(); }
};

/// Compares sys.lifts on archetypes with brute-force lifting on every ordered
/// pair of instances up to the bound.
LiftingReport verify_lifting_predicate(const ArchetypeSystem& sys, SystemKind k, int bound);

struct SquareReport {
  std::size_t squares = 0;
  /// Squares where the two filler conditions disagree with brute-force search.
  std::size_t condition_mismatches = 0;
  /// Squares where construct_filler's output is missing or not a diagonal.
  std::size_t construction_failures = 0;

  bool clean() const { return condition_mismatches == 0 && construction_failures == 0; }
};

/// Every commuting square of functions between sets of size <= bound.
SquareReport verify_filler_conditions(int bound);

/// composites[a][b] over the universe, scanning every composable instance pair.
std::vector<std::vector<std::vector<int>>> derive_composites(const InstanceCategory& inst,
                                                             const std::vector<unsigned>& universe);
/// The same relation for all objects up to the bound. Set and pointed maps are
/// taken up to automorphism of the outer objects, which preserves all flags.
std::vector<std::vector<std::vector<int>>> derive_composites(SystemKind k, int bound,
                                                             const std::vector<unsigned>& universe);

/// factorizations[t]: (a, b) realized by a factorization of every instance of
/// t with endpoints <= bound. Middle objects range up to |A| + |B| + 1 points
/// (dim A + dim B + 1 for Vect), enumerated up to automorphism.
std::vector<std::vector<std::pair<int, int>>> derive_factorizations(SystemKind k, int bound,
                                                                    const std::vector<unsigned>& universe);

/// Archetypes realized by instances up to the bound, canonical order.
std::vector<unsigned> realized_universe(const InstanceCategory& inst);
std::vector<unsigned> realized_universe(SystemKind k, int bound);

struct DerivedLifting {
  std::vector<std::vector<bool>> lifts;
  std::vector<NonUniformPair> non_uniform;
};

/// Brute-force lifting over instances up to the bound, collapsed onto the
/// universe. An archetype pair is non-uniform if its instances disagree.
DerivedLifting derive_lifting(SystemKind k, int bound, const std::vector<unsigned>& universe);

/// Default scan bounds used by the checked-in tables.
int default_table_bound(SystemKind k);
int default_lifting_bound(SystemKind k, int bound);

/// Full derivation, including stability across lower bounds.
DerivedTables derive_tables(SystemKind k, int bound);

/// A concrete composable pair realizing (first, second, composite), as
/// instance names, searched at small bounds.
std::optional<std::pair<std::string, std::string>> realize_composite(SystemKind k, unsigned first_flags,
                                                                     unsigned second_flags,
                                                                     unsigned composite_flags);

struct Triple {
  MorphismClass cofibrations;
  MorphismClass fibrations;
  MorphismClass weak_equivalences;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct BruteForceResult {
  std::vector<Wfs> wfs;
  std::vector<Triple> model_structures;
};

/// Definition-level enumeration over all subset pairs and triples, with its
/// own lifting and factorization checks. Throws std::length_error("category
/// too large") above max_morphisms (at most 16).
BruteForceResult bruteforce_wfs_and_ms(const FiniteCategory& cat, int max_morphisms = 12);

}  // namespace wfs
