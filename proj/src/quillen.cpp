#include "wfs/quillen.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace wfs {

std::string to_string(CardClass a) {
  switch (a) {
    case CardClass::Zero: return "ZERO";
    case CardClass::One: return "ONE";
    case CardClass::Many: return "MANY";
  }
  return "?";
}

std::optional<CardClass> parse_card_class(const std::string& s) {
  if (s == "ZERO") return CardClass::Zero;
  if (s == "ONE") return CardClass::One;
  if (s == "MANY") return CardClass::Many;
  return std::nullopt;
}

std::string to_string(HomotopyLabel h) {
  switch (h) {
    case HomotopyLabel::Minus2: return "MINUS2";
    case HomotopyLabel::Minus1: return "MINUS1";
    case HomotopyLabel::ZeroTypes: return "ZERO_TYPES";
  }
  return "?";
}

std::string describe(HomotopyLabel h) {
  switch (h) {
    case HomotopyLabel::Minus2: return "(-2)-types";
    case HomotopyLabel::Minus1: return "(-1)-types";
    case HomotopyLabel::ZeroTypes: return "0-types";
  }
  return "?";
}

namespace {

void require_set(const ArchetypeSystem& sys) {
  if (sys.kind() != SystemKind::Set) throw std::invalid_argument("Quillen analysis needs the Set archetype system");
}

}  // namespace

// ∅ × f is id_∅ and hom(∅, f) is id_{*}. For non-empty A, A × f and hom(A, f)
// keep injectivity, surjectivity and emptiness of the domain.
int left_action(const ArchetypeSystem& sys, CardClass a, int archetype) {
  require_set(sys);
  return a == CardClass::Zero ? sys.index("ISO_E") : archetype;
}

int right_action(const ArchetypeSystem& sys, CardClass a, int archetype) {
  require_set(sys);
  return a == CardClass::Zero ? sys.index("ISO_N") : archetype;
}

namespace {

bool maps_into(const ArchetypeSystem& sys, int (*action)(const ArchetypeSystem&, CardClass, int), CardClass a,
               ArchetypeClass from, ArchetypeClass to) {
  for (int t : from.members())
    if (!to.contains(action(sys, a, t))) return false;
  return true;
}

}  // namespace

bool is_quillen_adjunction(const ArchetypeSystem& sys, CardClass a, const ArchetypeModelStructure& source,
                           const ArchetypeModelStructure& target) {
  return maps_into(sys, left_action, a, source.cofibrations, target.cofibrations) &&
         maps_into(sys, right_action, a, target.fibrations, source.fibrations);
}

bool is_quillen_adjunction_acyclic(const ArchetypeSystem& sys, CardClass a, const ArchetypeModelStructure& source,
                                   const ArchetypeModelStructure& target) {
  return maps_into(sys, left_action, a, source.acyclic_cofibrations(), target.acyclic_cofibrations()) &&
         maps_into(sys, right_action, a, target.acyclic_fibrations(), source.acyclic_fibrations());
}

bool is_quillen_equivalence(const ArchetypeSystem& sys, CardClass a, const ArchetypeModelStructure& source,
                            const ArchetypeModelStructure& target) {
  if (!is_quillen_adjunction(sys, a, source, target)) throw std::invalid_argument("not a Quillen adjunction");
  if (source.weak_equivalences != target.weak_equivalences) return false;
  switch (homotopy_label(sys, source.weak_equivalences)) {
    case HomotopyLabel::Minus2: return true;
    // Objects split into empty and non-empty; ∅ × (−) sends both to ∅.
    case HomotopyLabel::Minus1: return a != CardClass::Zero;
    // A × (−) on isomorphism classes of sets is a bijection only for |A| = 1.
    case HomotopyLabel::ZeroTypes: return a == CardClass::One;
  }
  return false;
}

HomotopyLabel homotopy_label(const ArchetypeSystem& sys, ArchetypeClass w) {
  if (sys.kind() != SystemKind::Set) throw std::invalid_argument("unclassified W");
  if (w == sys.named("any")) return HomotopyLabel::Minus2;
  if (w == sys.named("any_{!=0} u {id_0}")) return HomotopyLabel::Minus1;
  if (w == sys.named("bij")) return HomotopyLabel::ZeroTypes;
  throw std::invalid_argument("unclassified W");
}

QuillenGraph equivalence_graph(const ArchetypeSystem& sys, bool include_empty) {
  require_set(sys);
  QuillenGraph g;
  g.include_empty = include_empty;
  g.nodes = enumerate_model_structures(sys).structures;
  for (const auto& ms : g.nodes) g.labels.push_back(homotopy_label(sys, ms.weak_equivalences));

  const auto direct = [&](CardClass a, std::size_t i, std::size_t j) {
    const auto& x = g.nodes[i];
    const auto& y = g.nodes[j];
    return (is_quillen_adjunction(sys, a, x, y) && is_quillen_equivalence(sys, a, x, y)) ||
           (is_quillen_adjunction(sys, a, y, x) && is_quillen_equivalence(sys, a, y, x));
  };
  const auto n = g.nodes.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      QuillenEdge e{i, j, {}};
      for (auto a : {CardClass::One, CardClass::Many})
        if (direct(a, i, j)) e.via.push_back(a);
      const bool by_nonempty = !e.via.empty();
      if (include_empty && direct(CardClass::Zero, i, j)) {
        e.via.insert(e.via.begin(), CardClass::Zero);
        if (!by_nonempty) g.empty_only_edges.push_back(e);
      }
      if (e.via.empty()) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      g.edges.push_back(std::move(e));
    }

  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto v : adj[u])
        if (dist[s][v] < 0) {
          dist[s][v] = dist[s][u] + 1;
          q.push(v);
        }
    }
  }
  std::vector<bool> placed(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (placed[s]) continue;
    std::vector<std::size_t> comp;
    for (std::size_t v = 0; v < n; ++v)
      if (dist[s][v] >= 0) {
        comp.push_back(v);
        placed[v] = true;
      }
    g.components.push_back(std::move(comp));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.nodes[i].weak_equivalences == g.nodes[j].weak_equivalences) g.same_w.push_back({i, j, dist[i][j]});
  return g;
}

}  // namespace wfs
