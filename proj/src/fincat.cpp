#include "wfs/fincat.hpp"

#include <map>
#include <stdexcept>

namespace wfs {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<int> identities, std::vector<int> composition)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      composition_(std::move(composition)) {
  const auto n = objects_.size();
  const auto m = morphisms_.size();
  if (identities_.size() != n) throw std::invalid_argument("identities: one entry per object required");
  if (composition_.size() != m * m) throw std::invalid_argument("composition table must be morphisms x morphisms");
  for (const auto& f : morphisms_)
    if (f.src < 0 || f.dst < 0 || static_cast<std::size_t>(f.src) >= n || static_cast<std::size_t>(f.dst) >= n)
      throw std::invalid_argument("morphism '" + f.name + "' has an endpoint out of range");
  for (int id : identities_)
    if (id < 0 || static_cast<std::size_t>(id) >= m) throw std::invalid_argument("identity id out of range");
  for (int c : composition_)
    if (c != kNoComposite && (c < 0 || static_cast<std::size_t>(c) >= m))
      throw std::invalid_argument("composite id out of range");

  hom_.assign(n * n, {});
  for (std::size_t i = 0; i < m; ++i) {
    const auto& f = morphisms_[i];
    hom_[static_cast<std::size_t>(f.src) * n + static_cast<std::size_t>(f.dst)].push_back(static_cast<int>(i));
    morphism_index_.emplace(f.name, static_cast<int>(i));
  }
}

std::optional<int> FiniteCategory::find_morphism(const std::string& name) const {
  if (auto it = morphism_index_.find(name); it != morphism_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<int> FiniteCategory::find_object(const std::string& name) const {
  for (int o = 0; o < object_count(); ++o)
    if (objects_[static_cast<std::size_t>(o)] == name) return o;
  return std::nullopt;
}

MorphismClass FiniteCategory::identity_class() const { return make_class(identities_); }

MorphismClass FiniteCategory::isomorphisms() const {
  MorphismClass out(morphisms_.size());
  for (int f = 0; f < morphism_count(); ++f)
    for (int g : hom(dst(f), src(f)))
      if (compose(f, g) == identity(src(f)) && compose(g, f) == identity(dst(f))) {
        out.insert(f);
        break;
      }
  return out;
}

std::vector<std::string> FiniteCategory::member_names(const MorphismClass& c) const {
  std::vector<std::string> out;
  for (int m : c.members()) out.push_back(morphism(m).name);
  return out;
}

std::vector<Violation> validate(const FiniteCategory& cat) {
  std::vector<Violation> out;
  const int m = cat.morphism_count();
  auto name = [&](int f) { return cat.morphism(f).name; };

  for (int o = 0; o < cat.object_count(); ++o) {
    int id = cat.identity(o);
    if (cat.src(id) != o || cat.dst(id) != o)
      out.push_back({"identity of object '" + cat.object_name(o) + "' is not an endomorphism of it", {id}});
  }

  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      int c = cat.compose(f, g);
      bool composable = cat.dst(f) == cat.src(g);
      if (composable && c == FiniteCategory::kNoComposite)
        out.push_back({"missing composite of (" + name(f) + ", " + name(g) + ")", {f, g}});
      else if (!composable && c != FiniteCategory::kNoComposite)
        out.push_back({"composite given for non-composable (" + name(f) + ", " + name(g) + ")", {f, g}});
      else if (composable && (cat.src(c) != cat.src(f) || cat.dst(c) != cat.dst(g)))
        out.push_back({"composite of (" + name(f) + ", " + name(g) + ") has wrong endpoints", {f, g}});
    }
  if (!out.empty()) return out;

  for (int f = 0; f < m; ++f) {
    if (cat.compose(cat.identity(cat.src(f)), f) != f || cat.compose(f, cat.identity(cat.dst(f))) != f)
      out.push_back({"identity law at " + name(f), {f}});
  }

  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (cat.dst(f) != cat.src(g)) continue;
      int gf = cat.compose(f, g);
      for (int h = 0; h < m; ++h) {
        if (cat.dst(g) != cat.src(h)) continue;
        if (cat.compose(gf, h) != cat.compose(f, cat.compose(g, h)))
          out.push_back({"associativity at (" + name(f) + ", " + name(g) + ", " + name(h) + ")", {f, g, h}});
      }
    }
  return out;
}

FiniteCategory terminal_category() { return discrete_category(1); }

FiniteCategory discrete_category(int objects) {
  std::vector<std::string> obj;
  std::vector<Morphism> mor;
  std::vector<int> ids;
  for (int i = 0; i < objects; ++i) {
    obj.push_back(std::to_string(i));
    mor.push_back({"id_" + std::to_string(i), i, i});
    ids.push_back(i);
  }
  const auto m = static_cast<std::size_t>(objects);
  std::vector<int> table(m * m, FiniteCategory::kNoComposite);
  for (std::size_t i = 0; i < m; ++i) table[i * m + i] = static_cast<int>(i);
  return FiniteCategory(std::move(obj), std::move(mor), std::move(ids), std::move(table));
}

FiniteCategory chain_poset(int n) {
  std::vector<std::string> obj;
  std::vector<Morphism> mor;
  std::vector<int> ids(static_cast<std::size_t>(n + 1));
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i <= n; ++i) obj.push_back(std::to_string(i));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      index[{i, j}] = static_cast<int>(mor.size());
      if (i == j) ids[static_cast<std::size_t>(i)] = static_cast<int>(mor.size());
      mor.push_back({std::to_string(i) + "<=" + std::to_string(j), i, j});
    }
  const auto m = mor.size();
  std::vector<int> table(m * m, FiniteCategory::kNoComposite);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g)
      if (mor[f].dst == mor[g].src) table[f * m + g] = index.at({mor[f].src, mor[g].dst});
  return FiniteCategory(std::move(obj), std::move(mor), std::move(ids), std::move(table));
}

FiniteCategory product(const FiniteCategory& c1, const FiniteCategory& c2) {
  const int n2 = c2.object_count();
  const int m2 = c2.morphism_count();
  std::vector<std::string> obj;
  for (int a = 0; a < c1.object_count(); ++a)
    for (int b = 0; b < n2; ++b) obj.push_back("(" + c1.object_name(a) + "," + c2.object_name(b) + ")");
  std::vector<Morphism> mor;
  for (int f = 0; f < c1.morphism_count(); ++f)
    for (int g = 0; g < m2; ++g)
      mor.push_back({"(" + c1.morphism(f).name + "," + c2.morphism(g).name + ")", c1.src(f) * n2 + c2.src(g),
                     c1.dst(f) * n2 + c2.dst(g)});
  std::vector<int> ids;
  for (int a = 0; a < c1.object_count(); ++a)
    for (int b = 0; b < n2; ++b) ids.push_back(c1.identity(a) * m2 + c2.identity(b));
  const auto m = mor.size();
  std::vector<int> table(m * m, FiniteCategory::kNoComposite);
  for (int f1 = 0; f1 < c1.morphism_count(); ++f1)
    for (int g1 = 0; g1 < c1.morphism_count(); ++g1) {
      int h1 = c1.compose(f1, g1);
      if (h1 == FiniteCategory::kNoComposite) continue;
      for (int f2 = 0; f2 < m2; ++f2)
        for (int g2 = 0; g2 < m2; ++g2) {
          int h2 = c2.compose(f2, g2);
          if (h2 == FiniteCategory::kNoComposite) continue;
          table[static_cast<std::size_t>(f1 * m2 + f2) * m + static_cast<std::size_t>(g1 * m2 + g2)] = h1 * m2 + h2;
        }
    }
  return FiniteCategory(std::move(obj), std::move(mor), std::move(ids), std::move(table));
}

FiniteCategory opposite(const FiniteCategory& cat) {
  std::vector<Morphism> mor = cat.morphisms();
  for (auto& f : mor) std::swap(f.src, f.dst);
  const auto m = mor.size();
  std::vector<int> table(m * m, FiniteCategory::kNoComposite);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) table[f * m + g] = cat.compose(static_cast<int>(g), static_cast<int>(f));
  return FiniteCategory(cat.objects(), std::move(mor), cat.identities(), std::move(table));
}

SetSkeleton set_skeleton(int max_card) {
  SetSkeleton out;
  std::vector<std::string> obj;
  std::vector<Morphism> mor;
  std::vector<int> ids(static_cast<std::size_t>(max_card + 1));
  std::map<SetFunction, int> index;
  for (int a = 0; a <= max_card; ++a) obj.push_back(std::to_string(a));
  for (int a = 0; a <= max_card; ++a)
    for (int b = 0; b <= max_card; ++b)
      for (auto& f : all_functions(a, b)) {
        int id = static_cast<int>(mor.size());
        if (a == b && f == SetFunction::identity(a)) ids[static_cast<std::size_t>(a)] = id;
        mor.push_back({f.name(), a, b});
        index.emplace(f, id);
        out.functions.push_back(std::move(f));
      }
  const auto m = mor.size();
  std::vector<int> table(m * m, FiniteCategory::kNoComposite);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g)
      if (mor[f].dst == mor[g].src) table[f * m + g] = index.at(out.functions[f].then(out.functions[g]));
  out.category = FiniteCategory(std::move(obj), std::move(mor), std::move(ids), std::move(table));
  return out;
}

}  // namespace wfs
