#include "wfs/lifting.hpp"

#include <stdexcept>

#include "wfs/parallel.hpp"

namespace wfs {

bool commutes(const FiniteCategory& cat, const CatSquare& sq) {
  if (cat.src(sq.top) != cat.src(sq.left) || cat.dst(sq.top) != cat.src(sq.right)) return false;
  if (cat.src(sq.bottom) != cat.dst(sq.left) || cat.dst(sq.bottom) != cat.dst(sq.right)) return false;
  return cat.compose(sq.top, sq.right) == cat.compose(sq.left, sq.bottom);
}

bool has_filler(const FiniteCategory& cat, const CatSquare& sq) {
  if (!commutes(cat, sq)) throw std::invalid_argument("not a commuting square");
  for (int diag : cat.hom(cat.dst(sq.left), cat.src(sq.right)))
    if (cat.compose(sq.left, diag) == sq.top && cat.compose(diag, sq.right) == sq.bottom) return true;
  return false;
}

bool lifts(const FiniteCategory& cat, int left, int right) {
  const int a = cat.src(left), b = cat.dst(left);
  const int x = cat.src(right), y = cat.dst(right);
  for (int top : cat.hom(a, x))
    for (int bottom : cat.hom(b, y)) {
      if (cat.compose(top, right) != cat.compose(left, bottom)) continue;
      if (!has_filler(cat, {left, right, top, bottom})) return false;
    }
  return true;
}

LiftingRelation::LiftingRelation(const FiniteCategory& cat) {
  const auto m = static_cast<std::size_t>(cat.morphism_count());
  right_of_.assign(m, MorphismClass(m));
  left_of_.assign(m, MorphismClass(m));
  std::vector<char> verdict(m * m, 0);
  parallel_for(m * m, [&](std::size_t k) {
    verdict[k] = wfs::lifts(cat, static_cast<int>(k / m), static_cast<int>(k % m)) ? 1 : 0;
  });
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t r = 0; r < m; ++r)
      if (verdict[l * m + r]) {
        right_of_[l].insert(static_cast<int>(r));
        left_of_[r].insert(static_cast<int>(l));
      }
}

MorphismClass LiftingRelation::right_orthogonal(const MorphismClass& s) const {
  auto out = MorphismClass::full(right_of_.size());
  for (int l : s.members()) out &= right_of_[static_cast<std::size_t>(l)];
  return out;
}

MorphismClass LiftingRelation::left_orthogonal(const MorphismClass& s) const {
  auto out = MorphismClass::full(left_of_.size());
  for (int r : s.members()) out &= left_of_[static_cast<std::size_t>(r)];
  return out;
}

MorphismClass right_orthogonal(const FiniteCategory& cat, const MorphismClass& s) {
  auto out = cat.all_morphisms();
  for (int l : s.members())
    for (int r = 0; r < cat.morphism_count(); ++r)
      if (out.contains(r) && !lifts(cat, l, r)) out.erase(r);
  return out;
}

MorphismClass left_orthogonal(const FiniteCategory& cat, const MorphismClass& s) {
  auto out = cat.all_morphisms();
  for (int r : s.members())
    for (int l = 0; l < cat.morphism_count(); ++l)
      if (out.contains(l) && !lifts(cat, l, r)) out.erase(l);
  return out;
}

bool LiftingSquare::well_typed() const {
  return left.well_formed() && right.well_formed() && top.well_formed() && bottom.well_formed() &&
         top.domain_size == left.domain_size && top.codomain_size == right.domain_size &&
         bottom.domain_size == left.codomain_size && bottom.codomain_size == right.codomain_size;
}

bool LiftingSquare::commutes() const { return well_typed() && top.then(right) == left.then(bottom); }

FillerConditions filler_conditions(const LiftingSquare& sq) {
  FillerConditions out{true, true};
  std::vector<int> fiber_value(static_cast<std::size_t>(sq.left.codomain_size), -1);
  for (int a = 0; a < sq.left.domain_size; ++a) {
    auto& v = fiber_value[static_cast<std::size_t>(sq.left(a))];
    if (v >= 0 && v != sq.top(a)) out.fibers_collapsed = false;
    v = sq.top(a);
  }
  std::vector<bool> hit(static_cast<std::size_t>(sq.right.codomain_size), false);
  for (int v : sq.right.values) hit[static_cast<std::size_t>(v)] = true;
  for (int v : sq.bottom.values)
    if (!hit[static_cast<std::size_t>(v)]) out.fibers_nonempty = false;
  return out;
}

std::optional<SetFunction> construct_filler(const LiftingSquare& sq) {
  if (!filler_conditions(sq).both()) return std::nullopt;
  SetFunction diag{sq.left.codomain_size, sq.right.domain_size,
                   std::vector<int>(static_cast<std::size_t>(sq.left.codomain_size), -1)};
  for (int a = 0; a < sq.left.domain_size; ++a) diag.values[static_cast<std::size_t>(sq.left(a))] = sq.top(a);
  for (int b = 0; b < diag.domain_size; ++b) {
    auto& v = diag.values[static_cast<std::size_t>(b)];
    if (v >= 0) continue;
    for (int x = 0; x < sq.right.domain_size; ++x)
      if (sq.right(x) == sq.bottom(b)) {
        v = x;
        break;
      }
  }
  return diag;
}

}  // namespace wfs
