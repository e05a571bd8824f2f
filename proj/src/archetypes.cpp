#include "wfs/archetypes.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "wfs/hasse.hpp"
#include "wfs/table_io.hpp"

namespace wfs {

std::string to_string(SystemKind k) {
  switch (k) {
    case SystemKind::Set: return "set";
    case SystemKind::Pointed: return "pointed";
    case SystemKind::Vect: return "vect";
  }
  return "?";
}

std::optional<SystemKind> parse_system_kind(const std::string& s) {
  if (s == "set") return SystemKind::Set;
  if (s == "pointed") return SystemKind::Pointed;
  if (s == "vect") return SystemKind::Vect;
  return std::nullopt;
}

namespace {

using flags::kDomainEmpty, flags::kInjective, flags::kSurjective;
constexpr unsigned kIsoE = kInjective | kSurjective | kDomainEmpty;
constexpr unsigned kIsoN = kInjective | kSurjective;
constexpr unsigned kMonoE = kInjective | kDomainEmpty;

using Predicate = std::function<bool(unsigned)>;

std::vector<std::pair<std::string, Predicate>> named_predicates(SystemKind k) {
  switch (k) {
    case SystemKind::Set: {
      auto inj = [](unsigned f) { return (f & kInjective) != 0; };
      auto surj = [](unsigned f) { return (f & kSurjective) != 0; };
      auto empty = [](unsigned f) { return (f & kDomainEmpty) != 0; };
      auto inj0 = [](unsigned f) { return f == kMonoE; };
      return {
          {"bij", [=](unsigned f) { return inj(f) && surj(f); }},
          {"inj", inj},
          {"surj", surj},
          {"any", [](unsigned) { return true; }},
          {"inj_0", inj0},
          {"inj_{!=0} u {id_0}", [=](unsigned f) { return inj(f) && (!empty(f) || surj(f)); }},
          {"any_{!=0} u {id_0}", [=](unsigned f) { return !empty(f) || surj(f); }},
          {"surj u inj_0", [=](unsigned f) { return surj(f) || inj0(f); }},
          {"bij u inj_0", [=](unsigned f) { return (inj(f) && surj(f)) || inj0(f); }},
      };
    }
    case SystemKind::Pointed: {
      using flags::kBaseFiberTrivial, flags::kInjectiveOffBaseFiber, flags::kPointedSurjective;
      auto has = [](unsigned bits) { return [bits](unsigned f) { return (f & bits) == bits; }; };
      return {
          {"bij", has(kPointedSurjective | kBaseFiberTrivial | kInjectiveOffBaseFiber)},
          {"inj", has(kBaseFiberTrivial | kInjectiveOffBaseFiber)},
          {"surj", has(kPointedSurjective)},
          {"any", has(0)},
          {"inj_*", has(kBaseFiberTrivial)},
          {"inj_{!=*}", has(kInjectiveOffBaseFiber)},
          {"surj n inj_*", has(kPointedSurjective | kBaseFiberTrivial)},
          {"surj n inj_{!=*}", has(kPointedSurjective | kInjectiveOffBaseFiber)},
      };
    }
    case SystemKind::Vect: {
      auto has = [](unsigned bits) { return [bits](unsigned f) { return (f & bits) == bits; }; };
      return {
          {"iso", has(flags::kMono | flags::kEpi)},
          {"mon", has(flags::kMono)},
          {"epi", has(flags::kEpi)},
          {"hom", has(0)},
      };
    }
  }
  return {};
}

}  // namespace

std::vector<unsigned> canonical_flag_order(SystemKind k) {
  switch (k) {
    case SystemKind::Set: return {kIsoE, kIsoN, kMonoE, kInjective, kSurjective, 0};
    case SystemKind::Pointed: return {7, 6, 5, 4, 3, 2, 1, 0};
    case SystemKind::Vect: return {flags::kMono | flags::kEpi, flags::kMono, flags::kEpi, 0};
  }
  return {};
}

std::string archetype_name(SystemKind k, unsigned f) {
  switch (k) {
    case SystemKind::Set:
      switch (f) {
        case kIsoE: return "ISO_E";
        case kIsoN: return "ISO_N";
        case kMonoE: return "MONO_E";
        case kInjective: return "MONO_N";
        case kSurjective: return "EPI";
        case 0: return "GEN";
        default: return "INVALID";
      }
    case SystemKind::Pointed: {
      std::string s;
      s += (f & flags::kPointedSurjective) ? 'S' : 's';
      s += (f & flags::kBaseFiberTrivial) ? 'B' : 'b';
      s += (f & flags::kInjectiveOffBaseFiber) ? 'O' : 'o';
      return s;
    }
    case SystemKind::Vect:
      switch (f) {
        case flags::kMono | flags::kEpi: return "ISO";
        case flags::kMono: return "MONO";
        case flags::kEpi: return "EPI";
        case 0: return "GEN";
        default: return "INVALID";
      }
  }
  return "INVALID";
}

std::optional<unsigned> archetype_flags(SystemKind k, const std::string& name) {
  for (unsigned f : canonical_flag_order(k))
    if (archetype_name(k, f) == name) return f;
  return std::nullopt;
}

bool flags_are_iso(SystemKind k, unsigned f) {
  switch (k) {
    case SystemKind::Set: return (f & kIsoN) == kIsoN;
    case SystemKind::Pointed: return f == 7;
    case SystemKind::Vect: return f == (flags::kMono | flags::kEpi);
  }
  return false;
}

bool set_lifting_predicate(unsigned l, unsigned r) {
  bool left_nonempty_right_empty = !(l & kDomainEmpty) && (r & kDomainEmpty);
  bool inj = (l & kInjective) || (r & kInjective);
  bool surj = (l & kSurjective) || (r & kSurjective);
  return left_nonempty_right_empty || (inj && surj);
}

ArchetypeSystem::ArchetypeSystem(DerivedTables tables) : tables_(std::move(tables)) {
  const auto n = tables_.universe.size();
  if (n == 0 || n > 32) throw TableError("derived tables: universe must have 1..32 archetypes");
  if (tables_.lifts.size() != n || tables_.composites.size() != n || tables_.factorizations.size() != n)
    throw TableError("derived tables: table shapes do not match the universe");
  if (!tables_.non_uniform.empty()) {
    const auto& p = tables_.non_uniform.front();
    throw TableError("non-uniform lifting detected for (" + archetype_name(tables_.kind, tables_.universe[static_cast<std::size_t>(p.left)]) +
                     ", " + archetype_name(tables_.kind, tables_.universe[static_cast<std::size_t>(p.right)]) +
                     "): " + p.lifting_example + " lifts but " + p.failing_example + " does not");
  }
  for (unsigned f : tables_.universe) universe_.push_back({archetype_name(tables_.kind, f), f, flags_are_iso(tables_.kind, f)});

  right_of_.assign(n, {});
  left_of_.assign(n, {});
  comp_.assign(n * n, {});
  for (std::size_t l = 0; l < n; ++l) {
    if (tables_.lifts[l].size() != n || tables_.composites[l].size() != n)
      throw TableError("derived tables: table shapes do not match the universe");
    for (std::size_t r = 0; r < n; ++r) {
      if (tables_.lifts[l][r]) {
        right_of_[l].insert(static_cast<int>(r));
        left_of_[r].insert(static_cast<int>(l));
      }
      for (int c : tables_.composites[l][r]) comp_[l * n + r].insert(c);
    }
  }
  for (auto& [name, pred] : named_predicates(tables_.kind)) {
    ArchetypeClass c;
    for (std::size_t a = 0; a < n; ++a)
      if (pred(universe_[a].flags)) c.insert(static_cast<int>(a));
    named_.emplace_back(name, c);
  }
}

std::optional<int> ArchetypeSystem::find(const std::string& name) const {
  for (int a = 0; a < size(); ++a)
    if (archetype(a).name == name) return a;
  return std::nullopt;
}

int ArchetypeSystem::index(const std::string& name) const {
  if (auto a = find(name)) return *a;
  throw std::out_of_range("unknown archetype '" + name + "'");
}

std::optional<int> ArchetypeSystem::find_flags(unsigned flag_bits) const {
  for (int a = 0; a < size(); ++a)
    if (archetype(a).flags == flag_bits) return a;
  return std::nullopt;
}

ArchetypeClass ArchetypeSystem::isos() const {
  ArchetypeClass c;
  for (int a = 0; a < size(); ++a)
    if (archetype(a).iso) c.insert(a);
  return c;
}

ArchetypeClass ArchetypeSystem::make_class(const std::vector<std::string>& names) const {
  ArchetypeClass c;
  for (const auto& n : names) c.insert(index(n));
  return c;
}

ArchetypeClass ArchetypeSystem::named(const std::string& name) const {
  for (const auto& [n, c] : named_)
    if (n == name) return c;
  throw std::out_of_range("unknown class name '" + name + "'");
}

std::string ArchetypeSystem::class_name(ArchetypeClass c) const {
  for (const auto& [n, k] : named_)
    if (k == c) return n;
  std::string s = "{";
  for (int a : c.members()) {
    if (s.size() > 1) s += ", ";
    s += archetype(a).name;
  }
  return s + "}";
}

std::vector<std::string> ArchetypeSystem::member_names(ArchetypeClass c) const {
  std::vector<std::string> out;
  for (int a : c.members()) out.push_back(archetype(a).name);
  return out;
}

ArchetypeSystem ArchetypeSystem::with_lifting(int left, int right, bool value) const {
  auto t = tables_;
  t.lifts[static_cast<std::size_t>(left)][static_cast<std::size_t>(right)] = value;
  return ArchetypeSystem(std::move(t));
}

ArchetypeSystem make_system(DerivedTables tables) {
  if (tables.kind == SystemKind::Set) {
    for (std::size_t l = 0; l < tables.universe.size(); ++l)
      for (std::size_t r = 0; r < tables.universe.size(); ++r) {
        bool predicted = set_lifting_predicate(tables.universe[l], tables.universe[r]);
        if (l < tables.lifts.size() && r < tables.lifts[l].size() && tables.lifts[l][r] != predicted)
          throw TableError("derived tables stale: scanned lifting disagrees with the Set predicate at (" +
                           archetype_name(SystemKind::Set, tables.universe[l]) + ", " +
                           archetype_name(SystemKind::Set, tables.universe[r]) + ")");
      }
    tables.lifts.assign(tables.universe.size(), std::vector<bool>(tables.universe.size()));
    for (std::size_t l = 0; l < tables.universe.size(); ++l)
      for (std::size_t r = 0; r < tables.universe.size(); ++r)
        tables.lifts[l][r] = set_lifting_predicate(tables.universe[l], tables.universe[r]);
  }
  return ArchetypeSystem(std::move(tables));
}

ArchetypeSystem system_for(SystemKind k) { return make_system(parse_tables(checked_in_tables(k))); }
ArchetypeSystem set_system() { return system_for(SystemKind::Set); }
ArchetypeSystem pointed_system() { return system_for(SystemKind::Pointed); }
ArchetypeSystem vect_system() { return system_for(SystemKind::Vect); }

std::vector<std::string> validate_system(const ArchetypeSystem& sys) {
  std::vector<std::string> out;
  const int n = sys.size();
  for (int i = 0; i < n; ++i) {
    if (!sys.archetype(i).iso) continue;
    for (int x = 0; x < n; ++x) {
      if (!sys.lifts(i, x)) out.push_back(sys.archetype(i).name + " fails to lift against " + sys.archetype(x).name);
      if (!sys.lifts(x, i)) out.push_back(sys.archetype(x).name + " fails to lift against " + sys.archetype(i).name);
    }
  }
  for (int t = 0; t < n; ++t) {
    if (sys.factorizations(t).empty()) out.push_back("no factorization recorded for " + sys.archetype(t).name);
    bool left_unit = false, right_unit = false;
    for (int i = 0; i < n; ++i) {
      if (!sys.archetype(i).iso) continue;
      auto after = sys.composites(t, i), before = sys.composites(i, t);
      if (!after.is_subset_of(ArchetypeClass(1u << t)) || !before.is_subset_of(ArchetypeClass(1u << t)))
        out.push_back("composing " + sys.archetype(t).name + " with " + sys.archetype(i).name +
                      " changes its archetype");
      left_unit |= !before.empty();
      right_unit |= !after.empty();
    }
    if (!left_unit || !right_unit) out.push_back("no iso archetype composes with " + sys.archetype(t).name);
  }
  return out;
}

ArchetypeClass right_orthogonal(const ArchetypeSystem& sys, ArchetypeClass s) {
  auto out = sys.all();
  for (int l : s.members()) out = out & sys.right_of(l);
  return out;
}

ArchetypeClass left_orthogonal(const ArchetypeSystem& sys, ArchetypeClass s) {
  auto out = sys.all();
  for (int r : s.members()) out = out & sys.left_of(r);
  return out;
}

Orthogonals orthogonals(const ArchetypeSystem& sys, ArchetypeClass s) {
  return {left_orthogonal(sys, s), right_orthogonal(sys, s)};
}

ArchetypeClass composites(const ArchetypeSystem& sys, ArchetypeClass first, ArchetypeClass then) {
  ArchetypeClass out;
  for (int a : first.members())
    for (int b : then.members()) out = out | sys.composites(a, b);
  return out;
}

ArchetypeClass factorable(const ArchetypeSystem& sys, ArchetypeClass first, ArchetypeClass then) {
  ArchetypeClass out;
  for (int t = 0; t < sys.size(); ++t)
    for (auto [a, b] : sys.factorizations(t))
      if (first.contains(a) && then.contains(b)) {
        out.insert(t);
        break;
      }
  return out;
}

std::optional<int> unfactorable_archetype(const ArchetypeSystem& sys, ArchetypeClass left, ArchetypeClass right) {
  auto missing = sys.all() - factorable(sys, left, right);
  if (missing.empty()) return std::nullopt;
  return missing.members().front();
}

std::vector<ArchetypeWfs> enumerate_wfs(const ArchetypeSystem& sys) {
  std::vector<ArchetypeWfs> out;
  const std::uint32_t subsets = sys.all().bits();
  for (std::uint64_t bits = 0; bits <= subsets; ++bits) {
    ArchetypeClass left(static_cast<std::uint32_t>(bits));
    auto right = right_orthogonal(sys, left);
    if (left_orthogonal(sys, right) != left) continue;
    if (unfactorable_archetype(sys, left, right)) continue;
    out.push_back({left, right});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ArchetypeTriple> two_of_three_violations(const ArchetypeSystem& sys, ArchetypeClass w) {
  std::vector<ArchetypeTriple> out;
  const int n = sys.size();
  for (int pattern = 0; pattern < 3; ++pattern)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c : sys.composites(a, b).members()) {
          bool in_a = w.contains(a), in_b = w.contains(b), in_c = w.contains(c);
          bool hit = (pattern == 0 && !in_a && in_b && in_c) || (pattern == 1 && in_a && !in_b && in_c) ||
                     (pattern == 2 && in_a && in_b && !in_c);
          if (hit) out.push_back({a, b, c});
        }
  return out;
}

std::optional<ArchetypeTriple> two_of_three_violation(const ArchetypeSystem& sys, ArchetypeClass w) {
  auto all = two_of_three_violations(sys, w);
  if (all.empty()) return std::nullopt;
  return all.front();
}

ArchetypeModelSearch enumerate_model_structures(const ArchetypeSystem& sys) {
  ArchetypeModelSearch out;
  out.wfs = enumerate_wfs(sys);
  const auto& ws = out.wfs;
  for (std::size_t lo = 0; lo < ws.size(); ++lo)
    for (std::size_t up = 0; up < ws.size(); ++up) {
      if (!ws[lo].left.is_subset_of(ws[up].left)) continue;
      const auto cof = ws[up].left;
      const auto fib = ws[lo].right;
      const auto weq = composites(sys, ws[lo].left, ws[up].right);
      ArchetypeRejection rej{lo, up, FailedCheck::TwoOfThree, weq, {}};
      if (auto uniform = factorable(sys, ws[lo].left, ws[up].right); uniform != weq) {
        rej.failed = FailedCheck::NonUniformWeakEquivalences;
        rej.witness = {uniform.first_difference(weq)};
      } else if ((cof & weq) != ws[lo].left) {
        rej.failed = FailedCheck::AcyclicCofibrations;
        rej.witness = {(cof & weq).first_difference(ws[lo].left)};
      } else if ((fib & weq) != ws[up].right) {
        rej.failed = FailedCheck::AcyclicFibrations;
        rej.witness = {(fib & weq).first_difference(ws[up].right)};
      } else if (auto bad = two_of_three_violation(sys, weq)) {
        rej.witness = {bad->first, bad->second, bad->composite};
      } else {
        out.structures.push_back({cof, fib, weq, lo, up});
        continue;
      }
      out.rejections.push_back(rej);
    }
  std::sort(out.structures.begin(), out.structures.end(), [](const auto& a, const auto& b) {
    return std::tie(a.cofibrations, a.fibrations, a.weak_equivalences) <
           std::tie(b.cofibrations, b.fibrations, b.weak_equivalences);
  });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> wfs_hasse(const std::vector<ArchetypeWfs>& systems) {
  return cover_edges(systems, [](const ArchetypeWfs& a, const ArchetypeWfs& b) { return a.left.is_subset_of(b.left); });
}

}  // namespace wfs
