#include "wfs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "wfs/lifting.hpp"
#include "wfs/parallel.hpp"

namespace wfs {

int max_instance_bound(SystemKind k) {
  switch (k) {
    case SystemKind::Set: return 4;
    case SystemKind::Pointed: return 5;
    case SystemKind::Vect: return 3;
  }
  return 0;
}

int min_instance_bound(SystemKind k) { return k == SystemKind::Set ? 0 : 1; }

namespace {

using Values = std::vector<int>;

// ---- Set ----------------------------------------------------------------

unsigned set_flags(int dom, int cod, const Values& v) {
  std::vector<int> hits(static_cast<std::size_t>(cod), 0);
  for (int x : v) ++hits[static_cast<std::size_t>(x)];
  bool inj = std::all_of(hits.begin(), hits.end(), [](int h) { return h <= 1; });
  bool surj = std::all_of(hits.begin(), hits.end(), [](int h) { return h >= 1; });
  return (inj ? flags::kInjective : 0u) | (surj ? flags::kSurjective : 0u) | (dom == 0 ? flags::kDomainEmpty : 0u);
}

// ---- Pointed sets: {0..n-1} with basepoint 0 ------------------------------

unsigned pointed_flags(int, int cod, const Values& v) {
  std::vector<int> hits(static_cast<std::size_t>(cod), 0);
  bool base_trivial = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ++hits[static_cast<std::size_t>(v[i])];
    if (i > 0 && v[i] == 0) base_trivial = false;
  }
  bool surj = std::all_of(hits.begin(), hits.end(), [](int h) { return h >= 1; });
  bool inj_off = true;
  for (int y = 1; y < cod; ++y)
    if (hits[static_cast<std::size_t>(y)] > 1) inj_off = false;
  return (surj ? flags::kPointedSurjective : 0u) | (base_trivial ? flags::kBaseFiberTrivial : 0u) |
         (inj_off ? flags::kInjectiveOffBaseFiber : 0u);
}

// ---- F2-linear maps: column bitmasks ----------------------------------------

int rank_of(std::vector<int> cols) {
  int rank = 0;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] == 0) continue;
    ++rank;
    const int pivot = cols[i] & -cols[i];
    for (std::size_t j = i + 1; j < cols.size(); ++j)
      if (cols[j] & pivot) cols[j] ^= cols[i];
  }
  return rank;
}

int apply_linear(const Values& cols, int x) {
  int y = 0;
  for (std::size_t i = 0; i < cols.size(); ++i)
    if ((x >> i) & 1) y ^= cols[i];
  return y;
}

unsigned vect_flags(int dom, int cod, const Values& cols) {
  const int r = rank_of(cols);
  return (r == dom ? flags::kMono : 0u) | (r == cod ? flags::kEpi : 0u);
}

// ---- generic instance construction -----------------------------------------

struct KindOps {
  std::vector<int> sizes;
  std::vector<std::string> object_names;
  std::function<std::vector<Values>(int, int)> hom;
  std::function<Values(const Values&, const Values&)> compose;  // second after first
  std::function<unsigned(int, int, const Values&)> flags;
  std::function<std::string(int, int, const Values&)> name;
};

std::vector<Values> all_value_vectors(int len, int base, int first_fixed) {
  std::vector<Values> out;
  if (len == 0) return {Values{}};
  if (base == 0) return out;
  Values v(static_cast<std::size_t>(len), 0);
  while (true) {
    if (first_fixed < 0 || v[0] == first_fixed) out.push_back(v);
    int i = len - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == base - 1) v[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return out;
}

std::string bracket(const Values& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

KindOps ops_for(SystemKind k, int bound) {
  KindOps ops;
  const auto compose_functions = [](const Values& f, const Values& g) {
    Values out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[static_cast<std::size_t>(f[i])];
    return out;
  };
  switch (k) {
    case SystemKind::Set:
      for (int n = 0; n <= bound; ++n) {
        ops.sizes.push_back(n);
        ops.object_names.push_back(std::to_string(n));
      }
      ops.hom = [](int a, int b) { return all_value_vectors(a, b, -1); };
      ops.compose = compose_functions;
      ops.flags = set_flags;
      ops.name = [](int a, int b, const Values& v) {
        return bracket(v) + ":" + std::to_string(a) + "->" + std::to_string(b);
      };
      break;
    case SystemKind::Pointed:
      for (int n = 1; n <= bound; ++n) {
        ops.sizes.push_back(n);
        ops.object_names.push_back(std::to_string(n) + "*");
      }
      ops.hom = [](int a, int b) { return all_value_vectors(a, b, 0); };
      ops.compose = compose_functions;
      ops.flags = pointed_flags;
      ops.name = [](int a, int b, const Values& v) {
        return "*" + bracket(v) + ":" + std::to_string(a) + "->" + std::to_string(b);
      };
      break;
    case SystemKind::Vect:
      for (int n = 0; n <= bound; ++n) {
        ops.sizes.push_back(n);
        ops.object_names.push_back("F2^" + std::to_string(n));
      }
      ops.hom = [](int a, int b) { return all_value_vectors(a, 1 << b, -1); };
      ops.compose = [](const Values& f, const Values& g) {
        Values out(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) out[i] = apply_linear(g, f[i]);
        return out;
      };
      ops.flags = vect_flags;
      ops.name = [](int a, int b, const Values& v) {
        return "F2" + bracket(v) + ":" + std::to_string(a) + "->" + std::to_string(b);
      };
      break;
  }
  return ops;
}

}  // namespace

InstanceCategory instances(SystemKind k, int bound) {
  if (bound > max_instance_bound(k)) throw std::out_of_range("bound too large");
  if (bound < min_instance_bound(k)) throw std::invalid_argument("bound too small");
  const auto ops = ops_for(k, bound);
  const int n = static_cast<int>(ops.sizes.size());

  std::vector<Morphism> morphisms;
  std::vector<Values> data;
  std::vector<unsigned> fl;
  std::map<std::tuple<int, int, Values>, int> index;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (auto& v : ops.hom(ops.sizes[static_cast<std::size_t>(a)], ops.sizes[static_cast<std::size_t>(b)])) {
        const int da = ops.sizes[static_cast<std::size_t>(a)], db = ops.sizes[static_cast<std::size_t>(b)];
        index[{a, b, v}] = static_cast<int>(morphisms.size());
        morphisms.push_back({ops.name(da, db, v), a, b});
        fl.push_back(ops.flags(da, db, v));
        data.push_back(std::move(v));
      }

  std::vector<int> identities;
  for (int a = 0; a < n; ++a) {
    const int size = ops.sizes[static_cast<std::size_t>(a)];
    Values id(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) id[static_cast<std::size_t>(i)] = k == SystemKind::Vect ? 1 << i : i;
    identities.push_back(index.at({a, a, id}));
  }

  const auto m = morphisms.size();
  std::vector<int> table(m * m, FiniteCategory::kNoComposite);
  parallel_for(m, [&](std::size_t f) {
    for (std::size_t g = 0; g < m; ++g) {
      if (morphisms[f].dst != morphisms[g].src) continue;
      table[f * m + g] = index.at({morphisms[f].src, morphisms[g].dst, ops.compose(data[f], data[g])});
    }
  });

  return {k, bound, FiniteCategory(ops.object_names, std::move(morphisms), std::move(identities), std::move(table)),
          std::move(fl)};
}

bool lifts_bruteforce(const FiniteCategory& cat, int left, int right) {
  const int a = cat.src(left), b = cat.dst(left), x = cat.src(right), y = cat.dst(right);
  // Diagonals grouped by their image under `right`, so each bottom edge only
  // sees the diagonals that already make the lower triangle commute.
  std::unordered_map<int, std::vector<int>> diagonals_over;
  for (int d : cat.hom(b, x)) diagonals_over[cat.compose(d, right)].push_back(d);
  std::unordered_map<int, std::vector<int>> tops_over;
  for (int top : cat.hom(a, x)) tops_over[cat.compose(top, right)].push_back(top);

  for (int bottom : cat.hom(b, y)) {
    auto tops = tops_over.find(cat.compose(left, bottom));
    if (tops == tops_over.end()) continue;
    std::vector<int> reachable;
    if (auto ds = diagonals_over.find(bottom); ds != diagonals_over.end())
      for (int d : ds->second) reachable.push_back(cat.compose(left, d));
    for (int top : tops->second)
      if (std::find(reachable.begin(), reachable.end(), top) == reachable.end()) return false;
  }
  return true;
}

std::vector<unsigned> realized_universe(const InstanceCategory& inst) {
  std::vector<unsigned> out;
  for (unsigned f : canonical_flag_order(inst.kind))
    if (std::find(inst.flags.begin(), inst.flags.end(), f) != inst.flags.end()) out.push_back(f);
  return out;
}

namespace {

std::vector<int> universe_indices(const std::vector<unsigned>& morphism_flags, const std::vector<unsigned>& universe) {
  std::vector<int> out;
  for (unsigned f : morphism_flags) {
    auto it = std::find(universe.begin(), universe.end(), f);
    out.push_back(it == universe.end() ? -1 : static_cast<int>(it - universe.begin()));
  }
  return out;
}

/// Per-pair scan verdicts: which archetype pairs have a lifting instance and
/// which a failing one, with the first example of each.
struct LiftingScan {
  std::size_t pairs = 0;
  std::vector<std::vector<std::string>> lifting_example;
  std::vector<std::vector<std::string>> failing_example;
  std::vector<std::vector<char>> pair_verdicts;  // per morphism pair
};

LiftingScan scan_lifting(const InstanceCategory& inst, const std::vector<int>& arch, std::size_t n) {
  const auto& cat = inst.category;
  const auto m = static_cast<std::size_t>(cat.morphism_count());
  LiftingScan scan;
  scan.pairs = m * m;
  scan.pair_verdicts.assign(m, std::vector<char>(m, 0));
  parallel_for(m, [&](std::size_t l) {
    for (std::size_t r = 0; r < m; ++r)
      scan.pair_verdicts[l][r] = lifts_bruteforce(cat, static_cast<int>(l), static_cast<int>(r)) ? 1 : 0;
  });
  scan.lifting_example.assign(n, std::vector<std::string>(n));
  scan.failing_example.assign(n, std::vector<std::string>(n));
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t r = 0; r < m; ++r) {
      const int al = arch[l], ar = arch[r];
      if (al < 0 || ar < 0) continue;
      auto& slot = scan.pair_verdicts[l][r] ? scan.lifting_example : scan.failing_example;
      auto& ex = slot[static_cast<std::size_t>(al)][static_cast<std::size_t>(ar)];
      if (ex.empty()) ex = cat.morphism(static_cast<int>(l)).name + " / " + cat.morphism(static_cast<int>(r)).name;
    }
  return scan;
}

}  // namespace

LiftingReport verify_lifting_predicate(const ArchetypeSystem& sys, SystemKind k, int bound) {
  const auto inst = instances(k, bound);
  std::vector<unsigned> universe;
  for (const auto& a : sys.universe()) universe.push_back(a.flags);
  const auto arch = universe_indices(inst.flags, universe);

  LiftingReport report;
  for (std::size_t i = 0; i < arch.size(); ++i)
    if (arch[i] < 0) {
      auto name = archetype_name(k, inst.flags[i]);
      if (std::find(report.unknown_archetypes.begin(), report.unknown_archetypes.end(), name) ==
          report.unknown_archetypes.end())
        report.unknown_archetypes.push_back(name);
    }

  const auto scan = scan_lifting(inst, arch, universe.size());
  report.pairs_scanned = scan.pairs;
  const auto& cat = inst.category;
  for (std::size_t l = 0; l < arch.size(); ++l)
    for (std::size_t r = 0; r < arch.size(); ++r) {
      if (arch[l] < 0 || arch[r] < 0) continue;
      const bool scanned = scan.pair_verdicts[l][r] != 0;
      const bool predicted = sys.lifts(arch[l], arch[r]);
      if (scanned != predicted)
        report.mismatches.push_back(
            {cat.morphism(static_cast<int>(l)).name, cat.morphism(static_cast<int>(r)).name, scanned, predicted});
    }
  for (std::size_t a = 0; a < universe.size(); ++a)
    for (std::size_t b = 0; b < universe.size(); ++b)
      if (!scan.lifting_example[a][b].empty() && !scan.failing_example[a][b].empty())
        report.non_uniform.push_back({static_cast<int>(a), static_cast<int>(b), scan.lifting_example[a][b],
                                      scan.failing_example[a][b]});
  return report;
}

SquareReport verify_filler_conditions(int bound) {
  if (bound > max_instance_bound(SystemKind::Set)) throw std::out_of_range("bound too large");
  std::vector<std::vector<SetFunction>> fun(static_cast<std::size_t>((bound + 1) * (bound + 1)));
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b) fun[static_cast<std::size_t>(a * (bound + 1) + b)] = all_functions(a, b);
  const auto hom = [&](int a, int b) -> const std::vector<SetFunction>& {
    return fun[static_cast<std::size_t>(a * (bound + 1) + b)];
  };

  // One slot per (|A|, |B|, |X|, |Y|).
  const int side = bound + 1;
  const auto shapes = static_cast<std::size_t>(side * side * side * side);
  std::vector<SquareReport> partial(shapes);
  parallel_for(shapes, [&](std::size_t s) {
    const int a = static_cast<int>(s) % side, b = static_cast<int>(s) / side % side,
              x = static_cast<int>(s) / (side * side) % side, y = static_cast<int>(s) / (side * side * side);
    auto& out = partial[s];
    for (const auto& left : hom(a, b))
      for (const auto& right : hom(x, y))
        for (const auto& top : hom(a, x))
          for (const auto& bottom : hom(b, y)) {
            if (top.then(right) != left.then(bottom)) continue;
            ++out.squares;
            bool exists = false;
            for (const auto& d : hom(b, x))
              if (left.then(d) == top && d.then(right) == bottom) {
                exists = true;
                break;
              }
            const LiftingSquare sq{left, right, top, bottom};
            if (filler_conditions(sq).both() != exists) ++out.condition_mismatches;
            auto built = construct_filler(sq);
            if (built.has_value() != exists ||
                (built && (left.then(*built) != top || built->then(right) != bottom)))
              ++out.construction_failures;
          }
  });
  SquareReport total;
  for (const auto& p : partial) {
    total.squares += p.squares;
    total.condition_mismatches += p.condition_mismatches;
    total.construction_failures += p.construction_failures;
  }
  return total;
}

std::vector<std::vector<std::vector<int>>> derive_composites(const InstanceCategory& inst,
                                                             const std::vector<unsigned>& universe) {
  const auto n = universe.size();
  const auto arch = universe_indices(inst.flags, universe);
  const auto& cat = inst.category;
  std::vector<std::vector<std::set<int>>> seen(n, std::vector<std::set<int>>(n));
  for (int f = 0; f < cat.morphism_count(); ++f)
    for (int g = 0; g < cat.morphism_count(); ++g) {
      const int h = cat.compose(f, g);
      if (h == FiniteCategory::kNoComposite) continue;
      const int af = arch[static_cast<std::size_t>(f)], ag = arch[static_cast<std::size_t>(g)],
                ah = arch[static_cast<std::size_t>(h)];
      if (af < 0 || ag < 0 || ah < 0) continue;
      seen[static_cast<std::size_t>(af)][static_cast<std::size_t>(ag)].insert(ah);
    }
  std::vector<std::vector<std::vector<int>>> out(n, std::vector<std::vector<int>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[a][b].assign(seen[a][b].begin(), seen[a][b].end());
  return out;
}

namespace {

using FlagPairs = std::set<std::pair<unsigned, unsigned>>;

unsigned kind_flags(SystemKind k, int dom, int cod, const Values& v) {
  switch (k) {
    case SystemKind::Set: return set_flags(dom, cod, v);
    case SystemKind::Pointed: return pointed_flags(dom, cod, v);
    case SystemKind::Vect: return vect_flags(dom, cod, v);
  }
  return 0;
}

std::vector<int> object_sizes(SystemKind k, int bound) {
  std::vector<int> out;
  for (int n = k == SystemKind::Pointed ? 1 : 0; n <= bound; ++n) out.push_back(n);
  return out;
}

// Set and pointed maps are value vectors; for pointed sets index and value 0
// are the basepoint and stay fixed.
int first_free(SystemKind k) { return k == SystemKind::Pointed ? 1 : 0; }

/// One map per orbit of Aut(A) acting on hom(A, B): free values non-decreasing.
template <class Emit>
void maps_up_to_domain(SystemKind k, int dom, int cod, Emit&& emit) {
  Values v(static_cast<std::size_t>(dom), 0);
  std::function<void(int, int)> rec = [&](int i, int from) {
    if (i == dom) {
      emit(v);
      return;
    }
    for (int y = from; y < cod; ++y) {
      v[static_cast<std::size_t>(i)] = y;
      rec(i + 1, y);
    }
  };
  rec(first_free(k), 0);
}

/// One map per orbit of Aut(B) acting on hom(A, B): free values appear in
/// increasing order of first occurrence.
template <class Emit>
void maps_up_to_codomain(SystemKind k, int dom, int cod, Emit&& emit) {
  Values v(static_cast<std::size_t>(dom), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == dom) {
      emit(v);
      return;
    }
    for (int y = 0; y <= used && y < cod; ++y) {
      v[static_cast<std::size_t>(i)] = y;
      rec(i + 1, std::max(used, y + 1));
    }
  };
  rec(first_free(k), first_free(k));
}

/// One map per orbit of Aut(A) x Aut(B): the multiset of fiber sizes, with
/// the basepoint fiber kept apart for pointed sets.
std::vector<Values> maps_up_to_both(SystemKind k, int dom, int cod) {
  std::map<Values, Values> by_shape;
  maps_up_to_domain(k, dom, cod, [&](const Values& v) {
    Values fibers(static_cast<std::size_t>(cod), 0);
    for (int y : v) ++fibers[static_cast<std::size_t>(y)];
    std::sort(fibers.begin() + first_free(k), fibers.end(), std::greater<>());
    by_shape.try_emplace(fibers, v);
  });
  std::vector<Values> out;
  for (auto& [shape, v] : by_shape) out.push_back(std::move(v));
  return out;
}

std::string map_name(SystemKind k, int dom, int cod, const Values& v) { return ops_for(k, 0).name(dom, cod, v); }

/// Flags a Set or pointed r: M -> B can take once `free` more points of M are
/// sent anywhere, given the counts (capped at 2) of the values already fixed.
class TailFlags {
 public:
  TailFlags(SystemKind k, int cod) : kind_(k), cod_(cod) {}

  /// Bit f of the result is set when flag combination f is reachable.
  std::uint32_t reachable(const Values& counts, int free) {
    auto [it, fresh] = memo_.try_emplace({counts, free}, 0);
    if (!fresh) return it->second;
    // Per value, the tail adds 0, 1 or at least 2 points.
    Values add(static_cast<std::size_t>(cod_), 0);
    std::uint32_t out = 0;
    while (true) {
      int low = 0;
      bool open_ended = false;
      for (int a : add) {
        low += a;
        open_ended = open_ended || a == 2;
      }
      if (low == free || (low < free && open_ended)) {
        Values total(static_cast<std::size_t>(cod_));
        for (int y = 0; y < cod_; ++y)
          total[static_cast<std::size_t>(y)] = std::min(2, counts[static_cast<std::size_t>(y)] + add[static_cast<std::size_t>(y)]);
        out |= std::uint32_t{1} << flags_of(total);
      }
      int y = 0;
      while (y < cod_ && add[static_cast<std::size_t>(y)] == 2) add[static_cast<std::size_t>(y++)] = 0;
      if (y == cod_) break;
      ++add[static_cast<std::size_t>(y)];
    }
    return it->second = out;
  }

 private:
  unsigned flags_of(const Values& total) const {
    const int from = first_free(kind_);
    bool all_hit = true, all_single = true;
    for (int y = from; y < cod_; ++y) {
      all_hit = all_hit && total[static_cast<std::size_t>(y)] >= 1;
      all_single = all_single && total[static_cast<std::size_t>(y)] <= 1;
    }
    if (kind_ == SystemKind::Set)
      return (all_single ? flags::kInjective : 0u) | (all_hit ? flags::kSurjective : 0u);
    return (all_hit ? flags::kPointedSurjective : 0u) | (total[0] == 0 ? flags::kBaseFiberTrivial : 0u) |
           (all_single ? flags::kInjectiveOffBaseFiber : 0u);
  }

  SystemKind kind_;
  int cod_;
  std::map<std::pair<Values, int>, std::uint32_t> memo_;
};

// Up to automorphisms of M, l: A -> M has free image {f..f+k-1} with first
// occurrences in increasing order, and r only matters through how the
// remaining points of M are distributed over B. M ranges up to |A| + |B| + 1:
// dropping points of M outside the image of l keeps the flags of both parts as
// long as a preimage of each point of B, one collision and one point off the
// image of l (pointed: also one extra point over the basepoint) survive.
FlagPairs discrete_factorization_flags(SystemKind k, int dom, int cod, const Values& t) {
  FlagPairs out;
  TailFlags tails(k, cod);
  const int base = first_free(k);
  const int max_mid = dom + cod + 1;
  for (int mid = base; mid <= max_mid; ++mid) {
    Values l(static_cast<std::size_t>(dom), 0);
    Values fixed(static_cast<std::size_t>(base), 0);  // r on the image of l
    Values counts(static_cast<std::size_t>(cod), 0);
    std::function<void(int)> assign = [&](int i) {
      const int used = static_cast<int>(fixed.size());
      if (i == dom) {
        const int image = used - base;
        const unsigned lf = k == SystemKind::Set
                                ? (image == dom ? flags::kInjective : 0u) | (used == mid ? flags::kSurjective : 0u) |
                                      (dom == 0 ? flags::kDomainEmpty : 0u)
                                : pointed_flags(dom, mid, l);
        const std::uint32_t reach = tails.reachable(counts, mid - used);
        const unsigned empty = k == SystemKind::Set && mid == 0 ? flags::kDomainEmpty : 0u;
        for (unsigned rf = 0; rf < 8; ++rf)
          if (reach >> rf & 1) out.insert({lf, rf | empty});
        return;
      }
      const int ti = t[static_cast<std::size_t>(i)];
      for (int v = 0; v < used; ++v)
        if (fixed[static_cast<std::size_t>(v)] == ti) {
          l[static_cast<std::size_t>(i)] = v;
          assign(i + 1);
        }
      if (used < mid) {
        l[static_cast<std::size_t>(i)] = used;
        fixed.push_back(ti);
        auto& c = counts[static_cast<std::size_t>(ti)];
        const int old = c;
        c = std::min(2, c + 1);
        assign(i + 1);
        c = old;
        fixed.pop_back();
      }
    };
    assign(base);
  }
  return out;
}

/// Every subspace of F2^n, as a basis of bitmasks.
std::vector<Values> subspaces(int n) {
  const int vectors = 1 << n;
  std::vector<Values> out;
  for (std::uint32_t set = 1; set < (1u << vectors); set += 2) {  // must contain 0
    bool closed = true;
    for (int x = 0; x < vectors && closed; ++x)
      for (int y = 0; y < vectors && closed; ++y)
        if (((set >> x) & 1) && ((set >> y) & 1) && !((set >> (x ^ y)) & 1)) closed = false;
    if (!closed) continue;
    Values basis, span{0};
    for (int x = 1; x < vectors; ++x) {
      if (!((set >> x) & 1) || std::find(span.begin(), span.end(), x) != span.end()) continue;
      basis.push_back(x);
      const auto old = span.size();
      for (std::size_t i = 0; i < old; ++i) span.push_back(span[i] ^ x);
    }
    out.push_back(std::move(basis));
  }
  return out;
}

// Up to automorphisms of F2^M: l = [q; 0] with q: A ->> F2^k determined by its
// row space, r = [r1 | r2] with r1 forced by r1 q = t and r2 determined by its
// column space (padded with zero columns).
FlagPairs vect_factorization_flags(int dom, int cod, const Values& t) {
  FlagPairs out;
  const auto row_spaces = subspaces(dom);
  const auto col_spaces = subspaces(cod);
  for (int mid = 0; mid <= dom + cod + 1; ++mid)
    for (const auto& rows : row_spaces) {
      const int k = static_cast<int>(rows.size());
      if (k > mid) continue;
      Values q(static_cast<std::size_t>(dom), 0);
      for (int a = 0; a < dom; ++a)
        for (int i = 0; i < k; ++i)
          if ((rows[static_cast<std::size_t>(i)] >> a) & 1) q[static_cast<std::size_t>(a)] |= 1 << i;
      Values r1(static_cast<std::size_t>(k), 0);
      for (int i = 0; i < k; ++i)
        for (int u = 0; u < (1 << dom); ++u)
          if (apply_linear(q, u) == (1 << i)) {
            r1[static_cast<std::size_t>(i)] = apply_linear(t, u);
            break;
          }
      bool consistent = true;
      for (int a = 0; a < dom; ++a)
        if (apply_linear(r1, q[static_cast<std::size_t>(a)]) != t[static_cast<std::size_t>(a)]) consistent = false;
      if (!consistent) continue;
      const unsigned lf = (k == dom ? flags::kMono : 0u) | (k == mid ? flags::kEpi : 0u);
      const int free = mid - k;
      for (const auto& cols : col_spaces) {
        if (static_cast<int>(cols.size()) > free) continue;
        Values r = r1;
        r.insert(r.end(), cols.begin(), cols.end());
        r.resize(static_cast<std::size_t>(mid), 0);
        out.insert({lf, vect_flags(mid, cod, r)});
      }
    }
  return out;
}

void check_derivation_bound(SystemKind k, int bound) {
  if (bound > max_derivation_bound(k)) throw std::out_of_range("bound too large");
  if (bound < min_instance_bound(k)) throw std::invalid_argument("bound too small");
}

std::vector<std::vector<std::vector<int>>> to_relation(const std::set<std::tuple<unsigned, unsigned, unsigned>>& triples,
                                                       const std::vector<unsigned>& universe) {
  const auto n = universe.size();
  const auto index_of = [&](unsigned f) {
    auto it = std::find(universe.begin(), universe.end(), f);
    return it == universe.end() ? -1 : static_cast<int>(it - universe.begin());
  };
  std::vector<std::vector<std::set<int>>> seen(n, std::vector<std::set<int>>(n));
  for (auto [f, g, h] : triples) {
    const int a = index_of(f), b = index_of(g), c = index_of(h);
    if (a >= 0 && b >= 0 && c >= 0) seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].insert(c);
  }
  std::vector<std::vector<std::vector<int>>> out(n, std::vector<std::vector<int>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[a][b].assign(seen[a][b].begin(), seen[a][b].end());
  return out;
}

/// Composable (f, g) with f up to Aut(A) and g up to Aut(C); the flags of f,
/// g and g∘f are invariant under both. Stops early when `visit` returns true.
template <class Visit>
void canonical_composable_pairs(SystemKind k, int bound, Visit&& visit) {
  const auto sizes = object_sizes(k, bound);
  for (int b : sizes) {
    std::vector<std::pair<int, Values>> seconds;
    for (int c : sizes) maps_up_to_codomain(k, b, c, [&](const Values& g) { seconds.emplace_back(c, g); });
    for (int a : sizes) {
      bool stop = false;
      maps_up_to_domain(k, a, b, [&](const Values& f) {
        if (stop) return;
        for (const auto& [c, g] : seconds) {
          Values h(f.size());
          for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[static_cast<std::size_t>(f[i])];
          if (visit(a, b, c, f, g, h)) {
            stop = true;
            return;
          }
        }
      });
      if (stop) return;
    }
  }
}

}  // namespace

int max_derivation_bound(SystemKind k) {
  switch (k) {
    case SystemKind::Set: return 6;
    case SystemKind::Pointed: return 7;
    case SystemKind::Vect: return 3;
  }
  return 0;
}

std::vector<unsigned> realized_universe(SystemKind k, int bound) {
  check_derivation_bound(k, bound);
  if (k == SystemKind::Vect) return realized_universe(instances(k, bound));
  std::set<unsigned> seen;
  for (int a : object_sizes(k, bound))
    for (int b : object_sizes(k, bound))
      maps_up_to_domain(k, a, b, [&](const Values& v) { seen.insert(kind_flags(k, a, b, v)); });
  std::vector<unsigned> out;
  for (unsigned f : canonical_flag_order(k))
    if (seen.contains(f)) out.push_back(f);
  return out;
}

std::vector<std::vector<std::vector<int>>> derive_composites(SystemKind k, int bound,
                                                             const std::vector<unsigned>& universe) {
  check_derivation_bound(k, bound);
  if (k == SystemKind::Vect) return derive_composites(instances(k, bound), universe);
  std::set<std::tuple<unsigned, unsigned, unsigned>> triples;
  canonical_composable_pairs(k, bound, [&](int a, int b, int c, const Values& f, const Values& g, const Values& h) {
    triples.insert({kind_flags(k, a, b, f), kind_flags(k, b, c, g), kind_flags(k, a, c, h)});
    return false;
  });
  return to_relation(triples, universe);
}

std::vector<std::vector<std::pair<int, int>>> derive_factorizations(SystemKind k, int bound,
                                                                    const std::vector<unsigned>& universe) {
  check_derivation_bound(k, bound);
  struct Item {
    int dom, cod;
    Values data;
  };
  std::vector<Item> items;
  const auto sizes = object_sizes(k, bound);
  for (int a : sizes)
    for (int b : sizes) {
      if (k == SystemKind::Vect) {
        for (auto& v : all_value_vectors(a, 1 << b, -1)) items.push_back({a, b, std::move(v)});
      } else {
        for (auto& v : maps_up_to_both(k, a, b)) items.push_back({a, b, std::move(v)});
      }
    }

  std::vector<FlagPairs> found(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    const auto& it = items[i];
    found[i] = k == SystemKind::Vect ? vect_factorization_flags(it.dom, it.cod, it.data)
                                     : discrete_factorization_flags(k, it.dom, it.cod, it.data);
  });

  const auto n = universe.size();
  const auto index_of = [&](unsigned f) {
    auto it = std::find(universe.begin(), universe.end(), f);
    return it == universe.end() ? -1 : static_cast<int>(it - universe.begin());
  };
  std::vector<std::optional<std::set<std::pair<int, int>>>> common(n);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const int t = index_of(kind_flags(k, items[i].dom, items[i].cod, items[i].data));
    if (t < 0) continue;
    std::set<std::pair<int, int>> pairs;
    for (auto [lf, rf] : found[i]) {
      const int a = index_of(lf), b = index_of(rf);
      if (a >= 0 && b >= 0) pairs.insert({a, b});
    }
    auto& slot = common[static_cast<std::size_t>(t)];
    if (!slot) {
      slot = std::move(pairs);
      continue;
    }
    std::set<std::pair<int, int>> meet;
    std::set_intersection(slot->begin(), slot->end(), pairs.begin(), pairs.end(), std::inserter(meet, meet.end()));
    slot = std::move(meet);
  }
  std::vector<std::vector<std::pair<int, int>>> out(n);
  for (std::size_t t = 0; t < n; ++t)
    if (common[t]) out[t].assign(common[t]->begin(), common[t]->end());
  return out;
}

DerivedLifting derive_lifting(SystemKind k, int bound, const std::vector<unsigned>& universe) {
  const auto inst = instances(k, bound);
  const auto arch = universe_indices(inst.flags, universe);
  const auto n = universe.size();
  const auto scan = scan_lifting(inst, arch, n);
  DerivedLifting out;
  out.lifts.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const bool yes = !scan.lifting_example[a][b].empty(), no = !scan.failing_example[a][b].empty();
      out.lifts[a][b] = yes && !no;
      if (yes && no)
        out.non_uniform.push_back(
            {static_cast<int>(a), static_cast<int>(b), scan.lifting_example[a][b], scan.failing_example[a][b]});
    }
  return out;
}

int default_table_bound(SystemKind k) {
  switch (k) {
    case SystemKind::Set: return 4;
    case SystemKind::Pointed: return 7;
    case SystemKind::Vect: return 3;
  }
  return 0;
}

int default_lifting_bound(SystemKind k, int bound) {
  // Lifting scans are quadratic in the instance count; past these bounds they
  // stop being interactive.
  const int cap = k == SystemKind::Set ? 3 : k == SystemKind::Pointed ? 4 : 2;
  return std::min(bound, cap);
}

DerivedTables derive_tables(SystemKind k, int bound) {
  check_derivation_bound(k, bound);
  DerivedTables t;
  t.kind = k;
  t.bound = bound;
  t.lifting_bound = default_lifting_bound(k, bound);
  t.universe = realized_universe(k, bound);
  t.composites = derive_composites(k, bound, t.universe);
  t.factorizations = derive_factorizations(k, bound, t.universe);
  auto lifting = derive_lifting(k, t.lifting_bound, t.universe);
  t.lifts = lifting.lifts;
  t.non_uniform = lifting.non_uniform;

  t.stable_since = bound;
  for (int b = bound - 1; b >= min_instance_bound(k); --b) {
    if (realized_universe(k, b) != t.universe || derive_composites(k, b, t.universe) != t.composites ||
        derive_factorizations(k, b, t.universe) != t.factorizations)
      break;
    t.stable_since = b;
  }
  t.lifting_stable_since = t.lifting_bound;
  for (int b = t.lifting_bound - 1; b >= min_instance_bound(k); --b) {
    if (realized_universe(k, b) != t.universe) break;
    auto lower = derive_lifting(k, b, t.universe);
    if (lower.lifts != t.lifts || lower.non_uniform.empty() != t.non_uniform.empty()) break;
    t.lifting_stable_since = b;
  }
  return t;
}

std::optional<std::pair<std::string, std::string>> realize_composite(SystemKind k, unsigned first_flags,
                                                                     unsigned second_flags,
                                                                     unsigned composite_flags) {
  std::optional<std::pair<std::string, std::string>> found;
  if (k == SystemKind::Vect) {
    const auto inst = instances(k, max_instance_bound(k));
    const auto& cat = inst.category;
    for (int f = 0; f < cat.morphism_count() && !found; ++f) {
      if (inst.flags[static_cast<std::size_t>(f)] != first_flags) continue;
      for (int g = 0; g < cat.morphism_count(); ++g) {
        const int h = cat.compose(f, g);
        if (h != FiniteCategory::kNoComposite && inst.flags[static_cast<std::size_t>(g)] == second_flags &&
            inst.flags[static_cast<std::size_t>(h)] == composite_flags) {
          found = std::pair{cat.morphism(f).name, cat.morphism(g).name};
          break;
        }
      }
    }
    return found;
  }
  canonical_composable_pairs(k, max_derivation_bound(k),
                             [&](int a, int b, int c, const Values& f, const Values& g, const Values& h) {
                               if (kind_flags(k, a, b, f) != first_flags || kind_flags(k, b, c, g) != second_flags ||
                                   kind_flags(k, a, c, h) != composite_flags)
                                 return false;
                               found = std::pair{map_name(k, a, b, f), map_name(k, b, c, g)};
                               return true;
                             });
  return found;
}

BruteForceResult bruteforce_wfs_and_ms(const FiniteCategory& cat, int max_morphisms) {
  const int m = cat.morphism_count();
  if (m > std::min(max_morphisms, 16)) throw std::length_error("category too large");
  using Mask = std::uint32_t;
  const Mask subsets = Mask{1} << m;
  const Mask everything = subsets - 1;

  std::vector<Mask> right_of(static_cast<std::size_t>(m), 0), left_of(static_cast<std::size_t>(m), 0);
  for (int l = 0; l < m; ++l)
    for (int r = 0; r < m; ++r)
      if (lifts_bruteforce(cat, l, r)) {
        right_of[static_cast<std::size_t>(l)] |= Mask{1} << r;
        left_of[static_cast<std::size_t>(r)] |= Mask{1} << l;
      }
  std::vector<Mask> right_orth(subsets), left_orth(subsets);
  right_orth[0] = left_orth[0] = everything;
  for (Mask s = 1; s < subsets; ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    right_orth[s] = right_orth[s & (s - 1)] & right_of[low];
    left_orth[s] = left_orth[s & (s - 1)] & left_of[low];
  }

  std::vector<std::vector<std::pair<int, int>>> splits(static_cast<std::size_t>(m));
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (int h = cat.compose(f, g); h != FiniteCategory::kNoComposite) splits[static_cast<std::size_t>(h)].push_back({f, g});
  const auto factors = [&](Mask l, Mask r) {
    return std::all_of(splits.begin(), splits.end(), [&](const auto& ways) {
      return std::any_of(ways.begin(), ways.end(), [&](auto fg) { return (l >> fg.first & 1) && (r >> fg.second & 1); });
    });
  };

  std::set<std::pair<Mask, Mask>> systems;
  for (Mask l = 0; l < subsets; ++l)
    for (Mask r = 0; r < subsets; ++r)
      if (right_orth[l] == r && left_orth[r] == l && factors(l, r)) systems.insert({l, r});

  const auto two_of_three = [&](Mask w) {
    for (int f = 0; f < m; ++f)
      for (int g = 0; g < m; ++g) {
        const int h = cat.compose(f, g);
        if (h == FiniteCategory::kNoComposite) continue;
        const int in = (w >> f & 1) + (w >> g & 1) + (w >> h & 1);
        if (in == 2) return false;
      }
    return true;
  };

  // (C, F∩W) being a WFS makes C a left class and (C∩W, F) makes F a right
  // class, so restricting C and F to those classes loses no triple.
  std::set<Mask> lefts, rights;
  for (auto [l, r] : systems) {
    lefts.insert(l);
    rights.insert(r);
  }
  std::vector<std::tuple<Mask, Mask, Mask>> triples;
  for (Mask w = 0; w < subsets; ++w) {
    if (!two_of_three(w)) continue;
    for (Mask c : lefts)
      for (Mask f : rights)
        if (systems.contains({c & w, f}) && systems.contains({c, f & w})) triples.emplace_back(c, f, w);
  }

  const auto to_class = [&](Mask s) {
    MorphismClass out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      if (s >> i & 1) out.insert(i);
    return out;
  };
  BruteForceResult out;
  for (auto [l, r] : systems) out.wfs.push_back({to_class(l), to_class(r)});
  std::sort(out.wfs.begin(), out.wfs.end());
  for (auto [c, f, w] : triples) out.model_structures.push_back({to_class(c), to_class(f), to_class(w)});
  std::sort(out.model_structures.begin(), out.model_structures.end());
  return out;
}

}  // namespace wfs
