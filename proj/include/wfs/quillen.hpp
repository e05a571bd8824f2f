#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wfs/archetypes.hpp"

namespace wfs {

/// Cardinality class of A for the left adjoint A × (−) ⊣ hom(A, −) on Set.
enum class CardClass { Zero, One, Many };

std::string to_string(CardClass a);
std::optional<CardClass> parse_card_class(const std::string& s);

enum class HomotopyLabel { Minus2, Minus1, ZeroTypes };

/// "MINUS2", "MINUS1", "ZERO_TYPES"
std::string to_string(HomotopyLabel h);
/// "(-2)-types", "(-1)-types", "0-types"
std::string describe(HomotopyLabel h);

/// Archetype of A × f. Requires a Set system.
int left_action(const ArchetypeSystem& sys, CardClass a, int archetype);
/// Archetype of hom(A, f).
int right_action(const ArchetypeSystem& sys, CardClass a, int archetype);

/// Left adjoint preserves cofibrations and right adjoint preserves fibrations.
bool is_quillen_adjunction(const ArchetypeSystem& sys, CardClass a, const ArchetypeModelStructure& source,
                           const ArchetypeModelStructure& target);
/// The same test on acyclic cofibrations and acyclic fibrations.
bool is_quillen_adjunction_acyclic(const ArchetypeSystem& sys, CardClass a, const ArchetypeModelStructure& source,
                                   const ArchetypeModelStructure& target);

/// Throws std::invalid_argument("not a Quillen adjunction") when the pair is
/// not one.
bool is_quillen_equivalence(const ArchetypeSystem& sys, CardClass a, const ArchetypeModelStructure& source,
                            const ArchetypeModelStructure& target);

/// any -> MINUS2, any_{!=0} u {id_0} -> MINUS1, bij -> ZERO_TYPES. Throws
/// std::invalid_argument("unclassified W") otherwise, including for
/// non-Set systems.
HomotopyLabel homotopy_label(const ArchetypeSystem& sys, ArchetypeClass w);

struct QuillenEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  /// Cardinality classes giving a direct equivalence in either direction.
  std::vector<CardClass> via;
};

struct ZigzagDistance {
  std::size_t a = 0;
  std::size_t b = 0;
  /// Shortest zigzag of direct equivalences; -1 when unconnected.
  int length = -1;
};

struct QuillenGraph {
  bool include_empty = false;
  std::vector<ArchetypeModelStructure> nodes;
  std::vector<HomotopyLabel> labels;
  std::vector<QuillenEdge> edges;
  /// Sorted node lists, ordered by smallest member.
  std::vector<std::vector<std::size_t>> components;
  /// Every pair of nodes with the same weak equivalences, a < b.
  std::vector<ZigzagDistance> same_w;
  /// With include_empty, the edges that only A = ∅ provides.
  std::vector<QuillenEdge> empty_only_edges;
};

/// Nodes are the model structures of the Set system in enumeration order.
QuillenGraph equivalence_graph(const ArchetypeSystem& sys, bool include_empty);

}  // namespace wfs
