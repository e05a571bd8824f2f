#include "wfs/enumeration.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "wfs/hasse.hpp"
#include "wfs/parallel.hpp"

namespace wfs {

std::string to_string(FailedCheck c) {
  switch (c) {
    case FailedCheck::AcyclicCofibrations: return "acyclic-cofibrations";
    case FailedCheck::AcyclicFibrations: return "acyclic-fibrations";
    case FailedCheck::TwoOfThree: return "two-of-three";
    case FailedCheck::NonUniformWeakEquivalences: return "non-uniform-weak-equivalences";
  }
  return "?";
}

std::optional<TwoOfThreeWitness> two_of_three_violation(const FiniteCategory& cat, const MorphismClass& w) {
  const int m = cat.morphism_count();
  // pattern 0: first ∉ W; 1: second ∉ W; 2: composite ∉ W
  for (int pattern = 0; pattern < 3; ++pattern)
    for (int f = 0; f < m; ++f)
      for (int g = 0; g < m; ++g) {
        int h = cat.compose(f, g);
        if (h == FiniteCategory::kNoComposite) continue;
        bool in_f = w.contains(f), in_g = w.contains(g), in_h = w.contains(h);
        bool hit = (pattern == 0 && !in_f && in_g && in_h) || (pattern == 1 && in_f && !in_g && in_h) ||
                   (pattern == 2 && in_f && in_g && !in_h);
        if (hit) return TwoOfThreeWitness{f, g, h};
      }
  return std::nullopt;
}

MorphismClass composites(const FiniteCategory& cat, const MorphismClass& first, const MorphismClass& then) {
  MorphismClass out(static_cast<std::size_t>(cat.morphism_count()));
  const auto second = then.members();
  for (int l : first.members())
    for (int r : second) {
      int h = cat.compose(l, r);
      if (h != FiniteCategory::kNoComposite) out.insert(h);
    }
  return out;
}

namespace {

/// factorizations[m] = all (l, r) with r ∘ l = m.
std::vector<std::vector<std::pair<int, int>>> factorization_index(const FiniteCategory& cat) {
  std::vector<std::vector<std::pair<int, int>>> out(static_cast<std::size_t>(cat.morphism_count()));
  for (int l = 0; l < cat.morphism_count(); ++l)
    for (int r = 0; r < cat.morphism_count(); ++r) {
      int h = cat.compose(l, r);
      if (h != FiniteCategory::kNoComposite) out[static_cast<std::size_t>(h)].emplace_back(l, r);
    }
  return out;
}

std::optional<int> unfactorable(const std::vector<std::vector<std::pair<int, int>>>& index, const MorphismClass& left,
                                const MorphismClass& right) {
  for (std::size_t m = 0; m < index.size(); ++m) {
    bool ok = std::any_of(index[m].begin(), index[m].end(),
                          [&](auto lr) { return left.contains(lr.first) && right.contains(lr.second); });
    if (!ok) return static_cast<int>(m);
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> unfactorable_morphism(const FiniteCategory& cat, const MorphismClass& left,
                                         const MorphismClass& right) {
  return unfactorable(factorization_index(cat), left, right);
}

std::vector<MorphismClass> closed_right_classes(const LiftingRelation& rel) {
  const auto m = rel.morphism_count();
  std::set<MorphismClass> closure{MorphismClass::full(m)};
  for (std::size_t g = 0; g < m; ++g) {
    const auto& gen = rel.right_of(static_cast<int>(g));
    std::vector<MorphismClass> fresh;
    for (const auto& c : closure) {
      auto meet = c & gen;
      if (!closure.contains(meet)) fresh.push_back(std::move(meet));
    }
    closure.insert(fresh.begin(), fresh.end());
  }
  return {closure.begin(), closure.end()};
}

std::vector<MorphismClass> closed_right_classes(const FiniteCategory& cat) {
  return closed_right_classes(LiftingRelation(cat));
}

std::vector<Wfs> enumerate_wfs(const FiniteCategory& cat, const LiftingRelation& rel) {
  const auto index = factorization_index(cat);
  const auto candidates = closed_right_classes(rel);
  std::vector<std::optional<Wfs>> found(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    const auto& right = candidates[i];
    auto left = rel.left_orthogonal(right);
    if (rel.right_orthogonal(left) != right) return;
    if (unfactorable(index, left, right)) return;
    found[i] = Wfs{std::move(left), right};
  });
  std::vector<Wfs> out;
  for (auto& f : found)
    if (f) out.push_back(std::move(*f));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Wfs> enumerate_wfs(const FiniteCategory& cat) { return enumerate_wfs(cat, LiftingRelation(cat)); }

ModelStructureSearch enumerate_model_structures(const FiniteCategory& cat) {
  ModelStructureSearch out;
  out.wfs = enumerate_wfs(cat);
  const auto& sys = out.wfs;
  for (std::size_t lo = 0; lo < sys.size(); ++lo)
    for (std::size_t up = 0; up < sys.size(); ++up) {
      if (!sys[lo].left.is_subset_of(sys[up].left)) continue;
      const auto& cof = sys[up].left;
      const auto& fib = sys[lo].right;
      auto weq = composites(cat, sys[lo].left, sys[up].right);
      Rejection rej{lo, up, FailedCheck::TwoOfThree, weq, {}};
      if (auto acof = cof & weq; acof != sys[lo].left) {
        rej.failed = FailedCheck::AcyclicCofibrations;
        rej.witness = {acof.first_difference(sys[lo].left)};
      } else if (auto afib = fib & weq; afib != sys[up].right) {
        rej.failed = FailedCheck::AcyclicFibrations;
        rej.witness = {afib.first_difference(sys[up].right)};
      } else if (auto bad = two_of_three_violation(cat, weq)) {
        rej.witness = {bad->first, bad->second, bad->composite};
      } else {
        out.structures.push_back({cof, fib, std::move(weq), lo, up});
        continue;
      }
      out.rejections.push_back(std::move(rej));
    }
  std::sort(out.structures.begin(), out.structures.end(), [](const auto& a, const auto& b) {
    return std::tie(a.cofibrations, a.fibrations, a.weak_equivalences) <
           std::tie(b.cofibrations, b.fibrations, b.weak_equivalences);
  });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> wfs_hasse(const std::vector<Wfs>& systems) {
  return cover_edges(systems, [](const Wfs& a, const Wfs& b) { return a.left.is_subset_of(b.left); });
}

bool closed_under_composition(const FiniteCategory& cat, const MorphismClass& k) {
  return composites(cat, k, k).is_subset_of(k);
}

bool closed_under_retracts(const FiniteCategory& cat, const MorphismClass& k) {
  for (int f = 0; f < cat.morphism_count(); ++f) {
    if (k.contains(f)) continue;
    const int a = cat.src(f), b = cat.dst(f);
    for (int g : k.members()) {
      const int x = cat.src(g), y = cat.dst(g);
      for (int i : cat.hom(a, x))
        for (int r : cat.hom(x, a)) {
          if (cat.compose(i, r) != cat.identity(a)) continue;
          for (int j : cat.hom(b, y))
            for (int s : cat.hom(y, b)) {
              if (cat.compose(j, s) != cat.identity(b)) continue;
              if (cat.compose(i, g) == cat.compose(f, j) && cat.compose(r, f) == cat.compose(g, s)) return false;
            }
        }
    }
  }
  return true;
}

}  // namespace wfs
