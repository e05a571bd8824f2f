#include "wfs/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "wfs/archetypes.hpp"
#include "wfs/category_io.hpp"
#include "wfs/enumeration.hpp"
#include "wfs/oracle.hpp"
#include "wfs/parallel.hpp"
#include "wfs/quillen.hpp"
#include "wfs/table_io.hpp"

namespace wfs {

namespace {

using nlohmann::json;

/// Bad arguments or input files; reported with exit code 2.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string render(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream s;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      text += cells[c];
      if (c + 1 < cells.size()) text += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    s << text << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& r : rows) line(r);
  return s.str();
}

json sorted(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  return names;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string pair_label(const std::string& l, const std::string& r) { return "(" + l + ", " + r + ")"; }

// ---- archetype-level tables -------------------------------------------------

struct ArchNames {
  const ArchetypeSystem& sys;
  std::string operator()(ArchetypeClass c) const { return sys.class_name(c); }
  json list(ArchetypeClass c) const { return sorted(sys.member_names(c)); }
  json wfs(const ArchetypeWfs& w) const {
    return {{"left", list(w.left)}, {"right", list(w.right)}, {"left_name", (*this)(w.left)},
            {"right_name", (*this)(w.right)}};
  }
};

std::string wfs_dot(const std::string& title, const std::vector<std::string>& labels,
                    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::ostringstream s;
  s << "digraph " << quote(title) << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < labels.size(); ++i) s << "  n" << i << " [label=" << quote(labels[i]) << "];\n";
  for (auto [a, b] : edges) s << "  n" << a << " -> n" << b << ";\n";
  s << "}\n";
  return s.str();
}

void arch_wfs(const ArchetypeSystem& sys, const std::string& format, std::ostream& out) {
  const ArchNames names{sys};
  const auto systems = enumerate_wfs(sys);
  const auto edges = wfs_hasse(systems);
  if (format == "json") {
    json j{{"category", to_string(sys.kind())}, {"what", "wfs"}, {"items", json::array()}, {"rejections", json::array()}};
    for (const auto& w : systems) j["items"].push_back(names.wfs(w));
    j["hasse"] = json::array();
    for (auto [a, b] : edges) j["hasse"].push_back({a, b});
    out << j.dump(2) << '\n';
  } else if (format == "dot") {
    std::vector<std::string> labels;
    for (const auto& w : systems) labels.push_back(pair_label(names(w.left), names(w.right)));
    out << wfs_dot(to_string(sys.kind()) + " wfs", labels, edges);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < systems.size(); ++i)
      rows.push_back({std::to_string(i + 1), names(systems[i].left), names(systems[i].right)});
    out << systems.size() << " weak factorization systems on " << to_string(sys.kind()) << "\n\n"
        << render({"#", "L", "R"}, rows) << '\n'
        << edges.size() << " cover edges (L inclusion):\n";
    for (auto [a, b] : edges) out << "  " << a + 1 << " < " << b + 1 << '\n';
  }
}

std::vector<std::string> witness_names(const ArchetypeSystem& sys, const std::vector<int>& w) {
  std::vector<std::string> out;
  for (int a : w) out.push_back(sys.archetype(a).name);
  return out;
}

std::optional<std::pair<std::string, std::string>> witness_instances(const ArchetypeSystem& sys,
                                                                     const ArchetypeRejection& r) {
  if (r.failed != FailedCheck::TwoOfThree || r.witness.size() != 3) return std::nullopt;
  return realize_composite(sys.kind(), sys.archetype(r.witness[0]).flags, sys.archetype(r.witness[1]).flags,
                           sys.archetype(r.witness[2]).flags);
}

void arch_ms(const ArchetypeSystem& sys, const std::string& format, bool verbose, std::ostream& out) {
  const ArchNames names{sys};
  const auto search = enumerate_model_structures(sys);
  const bool labelled = sys.kind() == SystemKind::Set;
  const auto wfs_label = [&](std::size_t i) {
    return pair_label(names(search.wfs[i].left), names(search.wfs[i].right));
  };

  if (format == "json") {
    json j{{"category", to_string(sys.kind())}, {"what", "model-structures"}, {"items", json::array()},
           {"rejections", json::array()}};
    for (const auto& ms : search.structures) {
      json item{{"cofibrations", names.list(ms.cofibrations)},
                {"fibrations", names.list(ms.fibrations)},
                {"weak_equivalences", names.list(ms.weak_equivalences)},
                {"names",
                 {{"cofibrations", names(ms.cofibrations)},
                  {"fibrations", names(ms.fibrations)},
                  {"weak_equivalences", names(ms.weak_equivalences)}}},
                {"lower", names.wfs(search.wfs[ms.lower])},
                {"upper", names.wfs(search.wfs[ms.upper])}};
      if (labelled) item["homotopy_category"] = to_string(homotopy_label(sys, ms.weak_equivalences));
      j["items"].push_back(item);
    }
    for (const auto& r : search.rejections) {
      json item{{"lower", names.wfs(search.wfs[r.lower])},
                {"upper", names.wfs(search.wfs[r.upper])},
                {"failed", to_string(r.failed)},
                {"weak_equivalences", names.list(r.weak_equivalences)},
                {"weak_equivalences_name", names(r.weak_equivalences)},
                {"witness", witness_names(sys, r.witness)}};
      if (auto inst = witness_instances(sys, r)) item["instances"] = {inst->first, inst->second};
      j["rejections"].push_back(item);
    }
    out << j.dump(2) << '\n';
    return;
  }

  if (format == "dot") {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < search.wfs.size(); ++i) labels.push_back(wfs_label(i));
    std::ostringstream s;
    s << "digraph " << quote(to_string(sys.kind()) + " model structures") << " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < labels.size(); ++i) s << "  n" << i << " [label=" << quote(labels[i]) << "];\n";
    for (auto [a, b] : wfs_hasse(search.wfs)) s << "  n" << a << " -> n" << b << " [color=gray];\n";
    for (const auto& ms : search.structures)
      s << "  n" << ms.lower << " -> n" << ms.upper << " [style=bold, label=" << quote("W = " + names(ms.weak_equivalences))
        << "];\n";
    s << "}\n";
    out << s.str();
    return;
  }

  std::vector<std::string> header{"#", "C", "F", "W"};
  if (labelled) header.push_back("Homotopy category");
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < search.structures.size(); ++i) {
    const auto& ms = search.structures[i];
    std::vector<std::string> row{std::to_string(i + 1), names(ms.cofibrations), names(ms.fibrations),
                                 names(ms.weak_equivalences)};
    if (labelled) row.push_back(describe(homotopy_label(sys, ms.weak_equivalences)));
    rows.push_back(std::move(row));
  }
  out << search.structures.size() << " model structures on " << to_string(sys.kind()) << "\n\n" << render(header, rows);
  if (!verbose) return;
  out << '\n' << search.rejections.size() << " rejected pairs:\n";
  for (const auto& r : search.rejections) {
    out << "  lower " << wfs_label(r.lower) << ", upper " << wfs_label(r.upper) << ": " << to_string(r.failed)
        << ", W = " << names(r.weak_equivalences);
    const auto w = witness_names(sys, r.witness);
    if (w.size() == 3) {
      out << ", witness " << w[0] << " then " << w[1] << " = " << w[2];
      if (auto inst = witness_instances(sys, r)) out << " (" << inst->first << " then " << inst->second << ")";
    } else if (w.size() == 1) {
      out << ", witness " << w[0];
    }
    out << '\n';
  }
}

void arch_quillen(const ArchetypeSystem& sys, bool include_empty, const std::string& format, std::ostream& out) {
  const ArchNames names{sys};
  const auto g = equivalence_graph(sys, include_empty);
  const auto node_label = [&](std::size_t i) {
    const auto& ms = g.nodes[i];
    return "(" + names(ms.cofibrations) + ", " + names(ms.fibrations) + ", " + names(ms.weak_equivalences) + ")";
  };
  const auto via = [](const QuillenEdge& e) {
    std::vector<std::string> v;
    for (auto a : e.via) v.push_back(to_string(a));
    return v;
  };

  if (format == "json") {
    json j{{"category", "set"}, {"what", "quillen"}, {"include_empty_left_adjoint", include_empty},
           {"items", json::array()}, {"rejections", json::array()}};
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      j["items"].push_back({{"id", i},
                            {"cofibrations", names.list(g.nodes[i].cofibrations)},
                            {"fibrations", names.list(g.nodes[i].fibrations)},
                            {"weak_equivalences", names.list(g.nodes[i].weak_equivalences)},
                            {"label", node_label(i)},
                            {"homotopy_category", to_string(g.labels[i])}});
    const auto edge_json = [&](const QuillenEdge& e) { return json{{"a", e.a}, {"b", e.b}, {"via", via(e)}}; };
    j["edges"] = json::array();
    for (const auto& e : g.edges) j["edges"].push_back(edge_json(e));
    j["components"] = g.components;
    j["zigzag"] = json::array();
    for (const auto& d : g.same_w) j["zigzag"].push_back({{"a", d.a}, {"b", d.b}, {"length", d.length}});
    j["empty_only_edges"] = json::array();
    for (const auto& e : g.empty_only_edges) j["empty_only_edges"].push_back(edge_json(e));
    out << j.dump(2) << '\n';
    return;
  }

  if (format == "dot") {
    std::ostringstream s;
    s << "graph \"set quillen equivalences\" {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) s << "  n" << i << " [label=" << quote(node_label(i)) << "];\n";
    for (const auto& e : g.edges) {
      std::string label;
      for (const auto& v : via(e)) label += (label.empty() ? "" : ",") + v;
      s << "  n" << e.a << " -- n" << e.b << " [label=" << quote(label) << "];\n";
    }
    s << "}\n";
    out << s.str();
    return;
  }

  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    rows.push_back({std::to_string(i + 1), node_label(i), describe(g.labels[i])});
  out << "Quillen equivalences between the " << g.nodes.size() << " model structures on set"
      << (include_empty ? " (A = 0 allowed)" : "") << "\n\n"
      << render({"#", "(C, F, W)", "Homotopy category"}, rows) << '\n';
  out << g.edges.size() << " direct equivalences:\n";
  for (const auto& e : g.edges) {
    std::string v;
    for (const auto& s : via(e)) v += (v.empty() ? "" : ",") + s;
    out << "  " << e.a + 1 << " -- " << e.b + 1 << "  via A = " << v << '\n';
  }
  out << '\n' << g.components.size() << " components:";
  for (const auto& c : g.components) {
    out << " {";
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i] + 1;
    out << "}";
  }
  out << "\n\nzigzag lengths between structures with equal W:\n";
  for (const auto& d : g.same_w)
    if (d.length != 1) out << "  " << d.a + 1 << " ~ " << d.b + 1 << ": " << d.length << '\n';
  const auto direct = std::count_if(g.same_w.begin(), g.same_w.end(), [](const auto& d) { return d.length == 1; });
  out << "  (" << direct << " other pairs are directly equivalent)\n";
  if (include_empty) {
    out << '\n' << g.empty_only_edges.size() << " equivalences only via A = 0:\n";
    for (const auto& e : g.empty_only_edges) out << "  " << e.a + 1 << " -- " << e.b + 1 << '\n';
  }
}

// ---- generic engine ---------------------------------------------------------

void cat_output(const FiniteCategory& cat, const std::string& what, const std::string& format, bool verbose,
                const std::string& title, std::ostream& out) {
  const auto list = [&](const MorphismClass& c) { return sorted(cat.member_names(c)); };
  const auto brace = [&](const MorphismClass& c) {
    std::string s = "{";
    for (const auto& n : cat.member_names(c)) s += (s.size() > 1 ? ", " : "") + n;
    return s + "}";
  };
  const auto wfs_json = [&](const Wfs& w) { return json{{"left", list(w.left)}, {"right", list(w.right)}}; };

  if (what == "wfs") {
    const auto systems = enumerate_wfs(cat);
    const auto edges = wfs_hasse(systems);
    if (format == "json") {
      json j{{"category", title}, {"what", "wfs"}, {"items", json::array()}, {"rejections", json::array()}};
      for (const auto& w : systems) j["items"].push_back(wfs_json(w));
      j["hasse"] = json::array();
      for (auto [a, b] : edges) j["hasse"].push_back({a, b});
      out << j.dump(2) << '\n';
    } else if (format == "dot") {
      std::vector<std::string> labels;
      for (const auto& w : systems) labels.push_back(pair_label(brace(w.left), brace(w.right)));
      out << wfs_dot(title, labels, edges);
    } else {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < systems.size(); ++i)
        rows.push_back({std::to_string(i + 1), brace(systems[i].left), brace(systems[i].right)});
      out << systems.size() << " weak factorization systems\n\n" << render({"#", "L", "R"}, rows) << '\n'
          << edges.size() << " cover edges (L inclusion):\n";
      for (auto [a, b] : edges) out << "  " << a + 1 << " < " << b + 1 << '\n';
    }
    return;
  }

  const auto search = enumerate_model_structures(cat);
  const auto witness = [&](const std::vector<int>& w) {
    std::vector<std::string> v;
    for (int m : w) v.push_back(cat.morphism(m).name);
    return v;
  };
  if (format == "json") {
    json j{{"category", title}, {"what", "model-structures"}, {"items", json::array()}, {"rejections", json::array()}};
    for (const auto& ms : search.structures)
      j["items"].push_back({{"cofibrations", list(ms.cofibrations)},
                            {"fibrations", list(ms.fibrations)},
                            {"weak_equivalences", list(ms.weak_equivalences)}});
    for (const auto& r : search.rejections)
      j["rejections"].push_back({{"lower", wfs_json(search.wfs[r.lower])},
                                 {"upper", wfs_json(search.wfs[r.upper])},
                                 {"failed", to_string(r.failed)},
                                 {"weak_equivalences", list(r.weak_equivalences)},
                                 {"witness", witness(r.witness)}});
    out << j.dump(2) << '\n';
    return;
  }
  if (format == "dot") {
    std::ostringstream s;
    s << "digraph " << quote(title) << " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < search.wfs.size(); ++i)
      s << "  n" << i << " [label=" << quote(pair_label(brace(search.wfs[i].left), brace(search.wfs[i].right)))
        << "];\n";
    for (auto [a, b] : wfs_hasse(search.wfs)) s << "  n" << a << " -> n" << b << " [color=gray];\n";
    for (const auto& ms : search.structures)
      s << "  n" << ms.lower << " -> n" << ms.upper << " [style=bold, label=" << quote("W = " + brace(ms.weak_equivalences))
        << "];\n";
    s << "}\n";
    out << s.str();
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < search.structures.size(); ++i) {
    const auto& ms = search.structures[i];
    rows.push_back({std::to_string(i + 1), brace(ms.cofibrations), brace(ms.fibrations), brace(ms.weak_equivalences)});
  }
  out << search.structures.size() << " model structures\n\n" << render({"#", "C", "F", "W"}, rows);
  if (!verbose) return;
  out << '\n' << search.rejections.size() << " rejected pairs:\n";
  for (const auto& r : search.rejections) {
    out << "  lower #" << r.lower + 1 << ", upper #" << r.upper + 1 << ": " << to_string(r.failed) << ", W = "
        << brace(r.weak_equivalences) << ", witness";
    for (const auto& w : witness(r.witness)) out << ' ' << w;
    out << '\n';
  }
}

// ---- verification suites ----------------------------------------------------

struct NamedCategory {
  std::string name;
  FiniteCategory cat;
};

std::vector<NamedCategory> suite_categories() {
  return {{"terminal", terminal_category()},
          {"discrete(2)", discrete_category(2)},
          {"walking arrow", chain_poset(1)},
          {"chain(2)", chain_poset(2)},
          {"arrow x arrow", product(chain_poset(1), chain_poset(1))},
          {"set skeleton(1)", set_skeleton(1).category}};
}

bool verify_lifting(int max_size, std::ostream& out) {
  bool ok = true;
  for (auto kind : {SystemKind::Set, SystemKind::Pointed, SystemKind::Vect}) {
    const int bound = max_size >= 0 ? std::min(max_size, max_instance_bound(kind))
                                    : default_lifting_bound(kind, max_instance_bound(kind));
    const auto report = verify_lifting_predicate(system_for(kind), kind, bound);
    out << "lifting " << to_string(kind) << " bound " << bound << ": " << report.pairs_scanned << " pairs, "
        << report.mismatches.size() << " mismatches, " << report.non_uniform.size() << " non-uniform, "
        << report.unknown_archetypes.size() << " unknown archetypes\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(report.mismatches.size(), 5); ++i)
      out << "  mismatch " << report.mismatches[i].left << " vs " << report.mismatches[i].right << '\n';
    ok = ok && report.clean();
  }
  const int square_bound = max_size >= 0 ? std::min(max_size, 3) : 3;
  const auto squares = verify_filler_conditions(square_bound);
  out << "filler conditions bound " << square_bound << ": " << squares.squares << " squares, "
      << squares.condition_mismatches << " condition mismatches, " << squares.construction_failures
      << " construction failures\n";
  return ok && squares.clean();
}

bool verify_tables(std::ostream& out) {
  bool ok = true;
  for (auto kind : {SystemKind::Set, SystemKind::Pointed, SystemKind::Vect}) {
    std::string status;
    try {
      const auto sys = system_for(kind);
      const auto fresh = derive_tables(kind, sys.tables().bound);
      const bool same = format_tables(fresh) == checked_in_tables(kind);
      const auto problems = validate_system(sys);
      status = same && problems.empty() ? "ok" : same ? "invalid: " + problems.front() : "differs from re-derivation";
      ok = ok && same && problems.empty();
    } catch (const TableError& e) {
      status = e.what();
      ok = false;
    }
    out << "tables " << to_string(kind) << ": " << status << '\n';
  }
  return ok;
}

std::vector<Wfs> swapped(const std::vector<Wfs>& systems) {
  std::vector<Wfs> out;
  for (const auto& w : systems) out.push_back({w.right, w.left});
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_duality(std::ostream& out) {
  bool ok = true;
  for (const auto& [name, cat] : suite_categories()) {
    const auto op = opposite(cat);
    const auto ms = enumerate_model_structures(cat);
    const auto ms_op = enumerate_model_structures(op);
    std::vector<Triple> dual, direct;
    for (const auto& s : ms.structures) dual.push_back({s.fibrations, s.cofibrations, s.weak_equivalences});
    for (const auto& s : ms_op.structures) direct.push_back({s.cofibrations, s.fibrations, s.weak_equivalences});
    std::sort(dual.begin(), dual.end());
    std::sort(direct.begin(), direct.end());
    const bool same = swapped(ms.wfs) == ms_op.wfs && dual == direct;
    out << "duality " << name << ": " << ms.wfs.size() << " wfs, " << ms.structures.size() << " model structures, "
        << (same ? "ok" : "MISMATCH") << '\n';
    ok = ok && same;
  }
  return ok;
}

bool verify_oracle(std::ostream& out) {
  bool ok = true;
  for (const auto& [name, cat] : suite_categories()) {
    const auto brute = bruteforce_wfs_and_ms(cat);
    const auto search = enumerate_model_structures(cat);
    std::vector<Triple> found;
    for (const auto& s : search.structures) found.push_back({s.cofibrations, s.fibrations, s.weak_equivalences});
    std::sort(found.begin(), found.end());
    const bool same = brute.wfs == search.wfs && brute.model_structures == found;
    out << "oracle " << name << ": " << brute.wfs.size() << " wfs, " << brute.model_structures.size()
        << " model structures, " << (same ? "ok" : "MISMATCH") << '\n';
    ok = ok && same;
  }
  return ok;
}

SystemKind kind_arg(const std::string& s) {
  auto k = parse_system_kind(s);
  if (!k) throw InvalidInput("unknown category '" + s + "' (expected set, pointed or vect)");
  return *k;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate weak factorization systems and model structures", "wfsenum"};
  app.require_subcommand(1);
  unsigned job_count = 0;
  app.add_option("--jobs", job_count, "worker threads (default: $WFS_JOBS or 1)");

  std::string what = "wfs", format = "table";
  const std::vector<std::string> formats{"table", "json", "dot"};

  auto* tables = app.add_subcommand("tables", "classification tables for set, pointed or vect");
  std::string kind;
  bool include_empty = false, verbose = false;
  tables->add_option("category", kind, "set, pointed or vect")->required();
  tables->add_option("--what", what)->check(CLI::IsMember({"wfs", "model-structures", "quillen"}));
  tables->add_option("--format", format)->check(CLI::IsMember(formats));
  tables->add_flag("--include-empty-left-adjoint", include_empty, "also consider A = 0 in A x (-)");
  tables->add_flag("--verbose", verbose, "include the rejection log");

  auto* enumerate = app.add_subcommand("enumerate", "run the generic engine on a category file");
  std::string input;
  enumerate->add_option("--input", input)->required();
  enumerate->add_option("--what", what)->check(CLI::IsMember({"wfs", "model-structures"}));
  enumerate->add_option("--format", format)->check(CLI::IsMember(formats));
  enumerate->add_flag("--verbose", verbose, "include the rejection log");

  auto* gen = app.add_subcommand("gen-poset", "write a product of chains as a category file");
  std::vector<int> chains;
  std::string output;
  gen->add_option("--chain", chains, "chain length (repeatable)")->required()->check(CLI::Range(0, 8));
  gen->add_option("--output", output)->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int max_size = -1;
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"lifting", "tables", "duality", "oracle"}));
  verify->add_option("--max-size", max_size)->check(CLI::Range(0, 5));

  auto* derive = app.add_subcommand("derive-tables", "re-derive archetype tables and diff against checked-in data");
  int bound = -1;
  derive->add_option("--kind", kind)->required();
  derive->add_option("--bound", bound)->required();
  derive->add_option("--output", output)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "wfsenum: " << e.what() << '\n';
    return kExitInvalid;
  }
  if (job_count > 0) set_jobs(job_count);

  try {
    if (*tables) {
      const auto k = kind_arg(kind);
      if (what == "quillen" && k != SystemKind::Set) throw InvalidInput("--what quillen is only available for set");
      if (include_empty && what != "quillen") throw InvalidInput("--include-empty-left-adjoint needs --what quillen");
      const auto sys = system_for(k);
      if (what == "wfs") arch_wfs(sys, format, out);
      else if (what == "model-structures") arch_ms(sys, format, verbose, out);
      else arch_quillen(sys, include_empty, format, out);
      return kExitOk;
    }
    if (*enumerate) {
      const auto cat = load_category_file(input);
      cat_output(cat, what, format, verbose, std::filesystem::path(input).stem().string(), out);
      return kExitOk;
    }
    if (*gen) {
      FiniteCategory cat = chain_poset(chains.front());
      for (std::size_t i = 1; i < chains.size(); ++i) cat = product(cat, chain_poset(chains[i]));
      std::ofstream file(output);
      if (!file) throw InvalidInput("cannot write " + output);
      file << format_category(cat);
      out << "wrote " << output << ": " << cat.object_count() << " objects, " << cat.morphism_count() << " morphisms\n";
      return kExitOk;
    }
    if (*verify) {
      bool ok = false;
      if (suite == "lifting") ok = verify_lifting(max_size, out);
      else if (suite == "tables") ok = verify_tables(out);
      else if (suite == "duality") ok = verify_duality(out);
      else ok = verify_oracle(out);
      out << (ok ? "PASS" : "FAIL") << '\n';
      return ok ? kExitOk : kExitMismatch;
    }
    if (*derive) {
      const auto k = kind_arg(kind);
      if (bound < min_instance_bound(k)) throw InvalidInput("--bound must be at least " + std::to_string(min_instance_bound(k)));
      const auto tables_text = format_tables(derive_tables(k, bound));
      std::filesystem::create_directories(output);
      const auto path = std::filesystem::path(output) / (to_string(k) + ".json");
      std::ofstream file(path);
      if (!file) throw InvalidInput("cannot write " + path.string());
      file << tables_text;
      const bool same = tables_text == checked_in_tables(k);
      out << "wrote " << path.string() << (same ? " (matches checked-in tables)" : " (differs from checked-in tables)")
          << '\n';
      return same ? kExitOk : kExitMismatch;
    }
  } catch (const InvalidInput& e) {
    err << "wfsenum: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const CategoryFileError& e) {
    err << "wfsenum: " << input << ":\n" << e.what() << '\n';
    return kExitInvalid;
  } catch (const TableError& e) {
    err << "wfsenum: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    err << "wfsenum: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::length_error& e) {
    err << "wfsenum: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace wfs
