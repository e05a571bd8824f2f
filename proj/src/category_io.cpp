#include "wfs/category_io.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <map>
#include <sstream>

namespace wfs {
namespace {

std::string render(const std::vector<CategoryFileError::Problem>& problems) {
  std::string s;
  for (const auto& p : problems) {
    if (!s.empty()) s += '\n';
    s += std::to_string(p.position.line) + ":" + std::to_string(p.position.column) + ": " + p.message;
  }
  return s;
}

SourcePosition position_of(const YAML::Node& node) {
  auto mark = node.Mark();
  if (mark.is_null()) return {0, 0};
  return {mark.line + 1, mark.column + 1};
}

class Reader {
 public:
  void fail(const YAML::Node& at, std::string message) { problems_.push_back({position_of(at), std::move(message)}); }
  void fail(SourcePosition at, std::string message) { problems_.push_back({at, std::move(message)}); }
  void throw_if_failed() const {
    if (!problems_.empty()) throw CategoryFileError(problems_);
  }

  std::string scalar(const YAML::Node& parent, const char* key) {
    auto node = parent[key];
    if (!node || !node.IsScalar()) {
      fail(parent, std::string("expected scalar field '") + key + "'");
      return {};
    }
    return node.as<std::string>();
  }

  YAML::Node sequence(const YAML::Node& root, const char* key) {
    auto node = root[key];
    if (!node || !node.IsSequence()) fail(root, std::string("expected a list '") + key + "'");
    return node;
  }

 private:
  std::vector<CategoryFileError::Problem> problems_;
};

}  // namespace

CategoryFileError::CategoryFileError(std::vector<Problem> problems)
    : std::runtime_error(render(problems)), problems_(std::move(problems)) {}

namespace {

FiniteCategory parse_document(const YAML::Node& root) {
  Reader in;
  if (!root.IsMap()) {
    in.fail(root, "expected a mapping with objects, morphisms, identities, composition");
    in.throw_if_failed();
  }

  std::vector<std::string> objects;
  std::map<std::string, int> object_index;
  auto obj_node = in.sequence(root, "objects");
  in.throw_if_failed();
  for (const auto& o : obj_node) {
    auto name = o.as<std::string>();
    if (!object_index.emplace(name, static_cast<int>(objects.size())).second) in.fail(o, "duplicate object '" + name + "'");
    objects.push_back(name);
  }

  std::vector<Morphism> morphisms;
  std::vector<SourcePosition> morphism_pos;
  std::map<std::string, int> morphism_index;
  auto mor_node = in.sequence(root, "morphisms");
  in.throw_if_failed();
  for (const auto& m : mor_node) {
    auto name = in.scalar(m, "name");
    auto src = in.scalar(m, "src");
    auto dst = in.scalar(m, "dst");
    int s = 0, d = 0;
    if (auto it = object_index.find(src); it != object_index.end()) s = it->second;
    else in.fail(m, "unknown source object '" + src + "'");
    if (auto it = object_index.find(dst); it != object_index.end()) d = it->second;
    else in.fail(m, "unknown target object '" + dst + "'");
    if (!morphism_index.emplace(name, static_cast<int>(morphisms.size())).second)
      in.fail(m, "duplicate morphism '" + name + "'");
    morphisms.push_back({name, s, d});
    morphism_pos.push_back(position_of(m));
  }
  in.throw_if_failed();

  auto lookup = [&](const YAML::Node& at, const std::string& name) {
    if (auto it = morphism_index.find(name); it != morphism_index.end()) return it->second;
    in.fail(at, "unknown morphism '" + name + "'");
    return -1;
  };

  std::vector<int> identities(objects.size(), -1);
  auto id_node = root["identities"];
  if (!id_node || !id_node.IsMap()) in.fail(root, "expected a mapping 'identities'");
  in.throw_if_failed();
  for (const auto& kv : id_node) {
    auto obj = kv.first.as<std::string>();
    auto it = object_index.find(obj);
    if (it == object_index.end()) {
      in.fail(kv.first, "unknown object '" + obj + "'");
      continue;
    }
    identities[static_cast<std::size_t>(it->second)] = lookup(kv.second, kv.second.as<std::string>());
  }
  for (std::size_t o = 0; o < objects.size(); ++o)
    if (identities[o] < 0) in.fail(id_node, "no identity given for object '" + objects[o] + "'");
  in.throw_if_failed();

  const auto m = morphisms.size();
  std::vector<int> table(m * m, FiniteCategory::kNoComposite);
  std::map<std::pair<int, int>, SourcePosition> entry_pos;
  auto comp_node = in.sequence(root, "composition");
  in.throw_if_failed();
  for (const auto& c : comp_node) {
    int f = lookup(c, in.scalar(c, "first"));
    int g = lookup(c, in.scalar(c, "then"));
    int h = lookup(c, in.scalar(c, "equals"));
    if (f < 0 || g < 0 || h < 0) continue;
    if (morphisms[static_cast<std::size_t>(f)].dst != morphisms[static_cast<std::size_t>(g)].src) {
      in.fail(c, "pair (" + morphisms[static_cast<std::size_t>(f)].name + ", " +
                     morphisms[static_cast<std::size_t>(g)].name + ") is not composable");
      continue;
    }
    if (!entry_pos.emplace(std::pair{f, g}, position_of(c)).second) {
      in.fail(c, "composite of (" + morphisms[static_cast<std::size_t>(f)].name + ", " +
                     morphisms[static_cast<std::size_t>(g)].name + ") listed twice");
      continue;
    }
    table[static_cast<std::size_t>(f) * m + static_cast<std::size_t>(g)] = h;
  }
  in.throw_if_failed();

  FiniteCategory cat(std::move(objects), std::move(morphisms), std::move(identities), std::move(table));
  for (const auto& v : validate(cat)) {
    SourcePosition at = position_of(comp_node);
    if (v.morphisms.size() >= 2) {
      if (auto it = entry_pos.find({v.morphisms[0], v.morphisms[1]}); it != entry_pos.end()) at = it->second;
    } else if (v.morphisms.size() == 1) {
      at = morphism_pos[static_cast<std::size_t>(v.morphisms[0])];
    }
    in.fail(at, v.message);
  }
  in.throw_if_failed();
  return cat;
}

}  // namespace

FiniteCategory parse_category(std::string_view text) {
  try {
    return parse_document(YAML::Load(std::string(text)));
  } catch (const YAML::Exception& e) {
    if (e.mark.is_null()) throw CategoryFileError({{{0, 0}, e.msg}});
    throw CategoryFileError({{{e.mark.line + 1, e.mark.column + 1}, e.msg}});
  }
}

FiniteCategory load_category_file(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw CategoryFileError({{{0, 0}, "cannot open '" + path.string() + "'"}});
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_category(buf.str());
}

std::string format_category(const FiniteCategory& cat) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "objects" << YAML::Value << YAML::Flow << cat.objects();
  out << YAML::Key << "morphisms" << YAML::Value << YAML::BeginSeq;
  for (const auto& f : cat.morphisms())
    out << YAML::Flow << YAML::BeginMap << YAML::Key << "name" << YAML::Value << f.name << YAML::Key << "src"
        << YAML::Value << cat.object_name(f.src) << YAML::Key << "dst" << YAML::Value << cat.object_name(f.dst)
        << YAML::EndMap;
  out << YAML::EndSeq;
  out << YAML::Key << "identities" << YAML::Value << YAML::BeginMap;
  for (int o = 0; o < cat.object_count(); ++o)
    out << YAML::Key << cat.object_name(o) << YAML::Value << cat.morphism(cat.identity(o)).name;
  out << YAML::EndMap;
  out << YAML::Key << "composition" << YAML::Value << YAML::BeginSeq;
  for (int f = 0; f < cat.morphism_count(); ++f)
    for (int g = 0; g < cat.morphism_count(); ++g) {
      int h = cat.compose(f, g);
      if (h == FiniteCategory::kNoComposite) continue;
      out << YAML::Flow << YAML::BeginMap << YAML::Key << "first" << YAML::Value << cat.morphism(f).name
          << YAML::Key << "then" << YAML::Value << cat.morphism(g).name << YAML::Key << "equals" << YAML::Value
          << cat.morphism(h).name << YAML::EndMap;
    }
  out << YAML::EndSeq << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace wfs
