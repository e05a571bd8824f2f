#include "wfs/table_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <map>

namespace wfs {

using nlohmann::json;

namespace {

std::string name_of(const DerivedTables& t, int a) {
  return archetype_name(t.kind, t.universe.at(static_cast<std::size_t>(a)));
}

[[noreturn]] void stale(const std::string& why) { throw TableError("derived tables missing/stale: " + why); }

}  // namespace

json tables_payload(const DerivedTables& t) {
  json j;
  j["kind"] = to_string(t.kind);
  j["bound"] = t.bound;
  j["lifting_bound"] = t.lifting_bound;
  j["stable_since"] = t.stable_since;
  j["lifting_stable_since"] = t.lifting_stable_since;
  const int n = static_cast<int>(t.universe.size());
  j["universe"] = json::array();
  for (int a = 0; a < n; ++a) j["universe"].push_back(name_of(t, a));

  j["lifts"] = json::array();
  for (int l = 0; l < n; ++l) {
    std::string row;
    for (int r = 0; r < n; ++r) row += t.lifts[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)] ? '1' : '0';
    j["lifts"].push_back(row);
  }

  j["comp"] = json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& cs = t.composites[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (cs.empty()) continue;
      json names = json::array();
      for (int c : cs) names.push_back(name_of(t, c));
      j["comp"].push_back({{"first", name_of(t, a)}, {"then", name_of(t, b)}, {"composites", names}});
    }

  j["fact"] = json::array();
  for (int m = 0; m < n; ++m) {
    json pairs = json::array();
    for (auto [a, b] : t.factorizations[static_cast<std::size_t>(m)])
      pairs.push_back(json::array({name_of(t, a), name_of(t, b)}));
    j["fact"].push_back({{"morphism", name_of(t, m)}, {"factorizations", pairs}});
  }

  j["non_uniform"] = json::array();
  for (const auto& p : t.non_uniform)
    j["non_uniform"].push_back({{"left", name_of(t, p.left)},
                                {"right", name_of(t, p.right)},
                                {"lifting_example", p.lifting_example},
                                {"failing_example", p.failing_example}});
  return j;
}

std::string content_hash(const json& payload) {
  const std::string text = payload.dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest.data(), &len, EVP_sha256(), nullptr);
  std::string hex = "sha256:";
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string format_tables(const DerivedTables& t) {
  auto j = tables_payload(t);
  j["hash"] = content_hash(j);
  return j.dump(2) + "\n";
}

DerivedTables parse_tables(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) stale("empty table document");
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    stale(e.what());
  }
  try {
    if (!j.contains("hash")) stale("no hash field");
    auto recorded = j["hash"].get<std::string>();
    j.erase("hash");
    if (content_hash(j) != recorded) stale("content hash mismatch");

    DerivedTables t;
    auto kind = parse_system_kind(j.at("kind").get<std::string>());
    if (!kind) stale("unknown kind");
    t.kind = *kind;
    t.bound = j.at("bound").get<int>();
    t.lifting_bound = j.at("lifting_bound").get<int>();
    t.stable_since = j.at("stable_since").get<int>();
    t.lifting_stable_since = j.at("lifting_stable_since").get<int>();

    std::map<std::string, int> index;
    for (const auto& name : j.at("universe")) {
      auto f = archetype_flags(t.kind, name.get<std::string>());
      if (!f) stale("unknown archetype " + name.dump());
      index[name.get<std::string>()] = static_cast<int>(t.universe.size());
      t.universe.push_back(*f);
    }
    auto idx = [&](const json& name) {
      auto it = index.find(name.get<std::string>());
      if (it == index.end()) stale("archetype " + name.dump() + " not in universe");
      return it->second;
    };
    const auto n = t.universe.size();

    for (const auto& row : j.at("lifts")) {
      auto s = row.get<std::string>();
      if (s.size() != n) stale("lifting row of wrong length");
      std::vector<bool> r;
      for (char c : s) r.push_back(c == '1');
      t.lifts.push_back(std::move(r));
    }
    if (t.lifts.size() != n) stale("lifting table of wrong size");

    t.composites.assign(n, std::vector<std::vector<int>>(n));
    for (const auto& e : j.at("comp")) {
      auto& cell = t.composites[static_cast<std::size_t>(idx(e.at("first")))][static_cast<std::size_t>(idx(e.at("then")))];
      for (const auto& c : e.at("composites")) cell.push_back(idx(c));
    }

    t.factorizations.assign(n, {});
    for (const auto& e : j.at("fact")) {
      auto& cell = t.factorizations[static_cast<std::size_t>(idx(e.at("morphism")))];
      for (const auto& p : e.at("factorizations")) cell.emplace_back(idx(p.at(0)), idx(p.at(1)));
    }

    for (const auto& e : j.at("non_uniform"))
      t.non_uniform.push_back({idx(e.at("left")), idx(e.at("right")), e.at("lifting_example").get<std::string>(),
                               e.at("failing_example").get<std::string>()});
    return t;
  } catch (const json::exception& e) {
    stale(e.what());
  }
}

}  // namespace wfs
