#include <gtest/gtest.h>

#include <algorithm>

#include "wfs/archetypes.hpp"

namespace wfs {
namespace {

struct NamedWfs {
  std::string left;
  std::string right;
};

struct NamedMs {
  std::string c;
  std::string f;
  std::string w;
};

std::vector<ArchetypeWfs> expected_wfs(const ArchetypeSystem& sys, const std::vector<NamedWfs>& rows) {
  std::vector<ArchetypeWfs> out;
  for (const auto& r : rows) out.push_back({sys.named(r.left), sys.named(r.right)});
  std::sort(out.begin(), out.end());
  return out;
}

using MsKey = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;

std::vector<MsKey> ms_keys(const std::vector<ArchetypeModelStructure>& ms) {
  std::vector<MsKey> out;
  for (const auto& m : ms) out.emplace_back(m.cofibrations.bits(), m.fibrations.bits(), m.weak_equivalences.bits());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MsKey> ms_keys(const ArchetypeSystem& sys, const std::vector<NamedMs>& rows) {
  std::vector<MsKey> out;
  for (const auto& r : rows) out.emplace_back(sys.named(r.c).bits(), sys.named(r.f).bits(), sys.named(r.w).bits());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(SetSystem, UniverseAndNamedClasses) {
  auto s = set_system();
  EXPECT_EQ(s.member_names(s.all()), (std::vector<std::string>{"ISO_E", "ISO_N", "MONO_E", "MONO_N", "EPI", "GEN"}));
  EXPECT_EQ(s.named("bij"), s.make_class({"ISO_E", "ISO_N"}));
  EXPECT_EQ(s.named("inj"), s.make_class({"ISO_E", "ISO_N", "MONO_E", "MONO_N"}));
  EXPECT_EQ(s.named("surj"), s.make_class({"ISO_E", "ISO_N", "EPI"}));
  EXPECT_EQ(s.named("inj_0"), s.make_class({"MONO_E"}));
  EXPECT_EQ(s.named("inj_{!=0} u {id_0}"), s.make_class({"ISO_E", "ISO_N", "MONO_N"}));
  EXPECT_EQ(s.named("any_{!=0} u {id_0}"), s.all() - s.make_class({"MONO_E"}));
  EXPECT_EQ(s.isos(), s.named("bij"));
  EXPECT_EQ(s.class_name(s.make_class({"ISO_E", "ISO_N", "EPI", "MONO_E"})), "surj u inj_0");
  EXPECT_EQ(s.class_name(s.make_class({"GEN"})), "{GEN}");
  EXPECT_THROW(s.index("NOPE"), std::out_of_range);
  EXPECT_TRUE(validate_system(s).empty());
}

TEST(SetSystem, LiftingExamples) {
  auto s = set_system();
  EXPECT_FALSE(s.lifts(s.index("GEN"), s.index("GEN")));
  EXPECT_TRUE(s.lifts(s.index("GEN"), s.index("MONO_E")));
  for (int t = 0; t < s.size(); ++t) {
    EXPECT_TRUE(s.lifts(s.index("ISO_N"), t));
    EXPECT_TRUE(s.lifts(t, s.index("ISO_E")));
  }
}

TEST(SetSystem, PredicateAgreesWithTable) {
  auto s = set_system();
  for (int l = 0; l < s.size(); ++l)
    for (int r = 0; r < s.size(); ++r)
      EXPECT_EQ(s.lifts(l, r), set_lifting_predicate(s.archetype(l).flags, s.archetype(r).flags));
}

TEST(SetSystem, Orthogonals) {
  auto s = set_system();
  auto one = [&](const char* n) { return s.make_class({n}); };
  EXPECT_EQ(right_orthogonal(s, one("MONO_E")), s.named("surj"));
  EXPECT_EQ(right_orthogonal(s, one("MONO_N")), s.named("surj u inj_0"));
  EXPECT_EQ(right_orthogonal(s, one("GEN")), s.named("bij u inj_0"));
  EXPECT_EQ(left_orthogonal(s, s.named("surj u inj_0")), s.named("inj_{!=0} u {id_0}"));
  auto o = orthogonals(s, one("EPI"));
  EXPECT_EQ(o.right, s.named("inj"));
  EXPECT_EQ(o.left, left_orthogonal(s, one("EPI")));
}

TEST(ArchetypeGalois, LawsOnAllSubsets) {
  for (auto sys : {set_system(), pointed_system(), vect_system()}) {
    const std::uint32_t n = 1u << sys.size();
    for (std::uint32_t a = 0; a < n; ++a) {
      ArchetypeClass s(a);
      auto rs = right_orthogonal(sys, s);
      auto ls = left_orthogonal(sys, s);
      EXPECT_TRUE(s.is_subset_of(left_orthogonal(sys, rs)));
      EXPECT_TRUE(s.is_subset_of(right_orthogonal(sys, ls)));
      EXPECT_EQ(right_orthogonal(sys, left_orthogonal(sys, rs)), rs);
      EXPECT_TRUE(sys.isos().is_subset_of(rs));
      for (std::uint32_t b = a; b < n; b = (b + 1) | a) {
        ArchetypeClass t(b);
        EXPECT_TRUE(right_orthogonal(sys, t).is_subset_of(rs));
      }
    }
  }
}

TEST(SetSystem, SixWfsAndHasse) {
  auto s = set_system();
  auto w = enumerate_wfs(s);
  EXPECT_EQ(w, expected_wfs(s, {{"bij", "any"},
                                {"inj_{!=0} u {id_0}", "surj u inj_0"},
                                {"inj", "surj"},
                                {"surj", "inj"},
                                {"any_{!=0} u {id_0}", "bij u inj_0"},
                                {"any", "bij"}}));
  auto edges = wfs_hasse(w);
  EXPECT_EQ(edges.size(), 7u);
  // Bottom (bij, any) and top (any, bij); two cover the bottom and two lie below the top.
  auto degree = [&](std::size_t v, bool up) {
    return std::count_if(edges.begin(), edges.end(), [&](auto e) { return (up ? e.first : e.second) == v; });
  };
  EXPECT_EQ(degree(0, true), 2);
  EXPECT_EQ(degree(5, false), 2);
  EXPECT_EQ(degree(0, false), 0);
  EXPECT_EQ(degree(5, true), 0);
}

TEST(SetSystem, NineModelStructures) {
  auto s = set_system();
  auto search = enumerate_model_structures(s);
  EXPECT_EQ(ms_keys(search.structures), ms_keys(s, {{"bij", "any", "any"},
                                                    {"inj_{!=0} u {id_0}", "surj u inj_0", "any"},
                                                    {"inj", "surj", "any"},
                                                    {"inj", "surj u inj_0", "any_{!=0} u {id_0}"},
                                                    {"surj", "inj", "any"},
                                                    {"any_{!=0} u {id_0}", "bij u inj_0", "any"},
                                                    {"any", "bij", "any"},
                                                    {"any", "bij u inj_0", "any_{!=0} u {id_0}"},
                                                    {"any", "any", "bij"}}));
  for (const auto& ms : search.structures) {
    EXPECT_EQ(composites(s, ms.acyclic_cofibrations(), ms.acyclic_fibrations()), ms.weak_equivalences);
    EXPECT_TRUE(factorable(s, ms.acyclic_cofibrations(), ms.acyclic_fibrations()).is_subset_of(ms.weak_equivalences));
    EXPECT_FALSE(two_of_three_violation(s, ms.weak_equivalences));
  }
}

TEST(SetSystem, RejectionForSurjInjPair) {
  auto s = set_system();
  auto search = enumerate_model_structures(s);
  auto it = std::find_if(search.rejections.begin(), search.rejections.end(), [&](const ArchetypeRejection& r) {
    return search.wfs[r.lower] == ArchetypeWfs{s.named("surj"), s.named("inj")} &&
           search.wfs[r.upper] == ArchetypeWfs{s.named("any_{!=0} u {id_0}"), s.named("bij u inj_0")};
  });
  ASSERT_NE(it, search.rejections.end());
  EXPECT_EQ(it->failed, FailedCheck::TwoOfThree);
  EXPECT_EQ(it->weak_equivalences, s.named("surj u inj_0"));
  EXPECT_EQ(it->witness, (std::vector<int>{s.index("MONO_N"), s.index("EPI"), s.index("ISO_N")}));
}

TEST(SetSystem, TwoOfThreeExamples) {
  auto s = set_system();
  EXPECT_FALSE(two_of_three_violation(s, s.all()));
  EXPECT_FALSE(two_of_three_violation(s, s.named("any_{!=0} u {id_0}")));
  auto v = two_of_three_violation(s, s.named("surj u inj_0"));
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (ArchetypeTriple{s.index("MONO_N"), s.index("EPI"), s.index("ISO_N")}));
  EXPECT_FALSE(two_of_three_violations(s, s.named("surj u inj_0")).empty());
}

TEST(SetSystem, CompositeTableExamples) {
  auto s = set_system();
  EXPECT_EQ(s.composites(s.index("ISO_N"), s.index("ISO_N")), s.make_class({"ISO_N"}));
  EXPECT_EQ(s.composites(s.index("EPI"), s.index("MONO_N")), s.make_class({"GEN"}));
  EXPECT_EQ(s.composites(s.index("MONO_N"), s.index("EPI")), s.make_class({"ISO_N", "MONO_N", "EPI", "GEN"}));
  // Isomorphisms are units for composition.
  for (int t = 0; t < s.size(); ++t) {
    bool empty_domain = s.archetype(t).flags & flags::kDomainEmpty;
    auto iso = s.index(empty_domain ? "ISO_E" : "ISO_N");
    EXPECT_EQ(s.composites(iso, t), ArchetypeClass(1u << t)) << s.archetype(t).name;
  }
}

TEST(SetSystem, FactorizationTableExamples) {
  auto s = set_system();
  const auto& gen = s.factorizations(s.index("GEN"));
  auto has = [&](const char* a, const char* b) {
    return std::find(gen.begin(), gen.end(), std::pair{s.index(a), s.index(b)}) != gen.end();
  };
  EXPECT_TRUE(has("EPI", "MONO_N"));
  EXPECT_TRUE(has("MONO_N", "EPI"));
  EXPECT_FALSE(has("MONO_E", "EPI"));
  for (int t = 0; t < s.size(); ++t) EXPECT_FALSE(s.factorizations(t).empty());
}

TEST(SetSystem, FaultInjectionChangesResult) {
  auto s = set_system();
  auto broken = s.with_lifting(s.index("GEN"), s.index("GEN"), true);
  EXPECT_TRUE(broken.lifts(s.index("GEN"), s.index("GEN")));
  auto gen = s.make_class({"GEN"});
  EXPECT_EQ(right_orthogonal(broken, gen), right_orthogonal(s, gen) | gen);
}

TEST(PointedSystem, SixWfsSevenModelStructures) {
  auto p = pointed_system();
  EXPECT_EQ(p.size(), 8);
  EXPECT_TRUE(validate_system(p).empty());
  EXPECT_EQ(p.named("inj"), p.named("inj_*") & p.named("inj_{!=*}"));
  auto w = enumerate_wfs(p);
  EXPECT_EQ(w, expected_wfs(p, {{"bij", "any"},
                                {"inj", "surj"},
                                {"surj n inj_{!=*}", "inj_*"},
                                {"inj_{!=*}", "surj n inj_*"},
                                {"surj", "inj"},
                                {"any", "bij"}}));
  EXPECT_EQ(wfs_hasse(w).size(), 7u);
  auto search = enumerate_model_structures(p);
  EXPECT_EQ(ms_keys(search.structures), ms_keys(p, {{"bij", "any", "any"},
                                                    {"inj", "surj", "any"},
                                                    {"surj n inj_{!=*}", "inj_*", "any"},
                                                    {"inj_{!=*}", "surj n inj_*", "any"},
                                                    {"surj", "inj", "any"},
                                                    {"any", "bij", "any"},
                                                    {"any", "any", "bij"}}));
}

TEST(VectSystem, FourWfsFiveModelStructures) {
  auto v = vect_system();
  EXPECT_EQ(v.member_names(v.all()), (std::vector<std::string>{"ISO", "MONO", "EPI", "GEN"}));
  EXPECT_TRUE(validate_system(v).empty());
  EXPECT_TRUE(v.lifts(v.index("MONO"), v.index("EPI")));
  EXPECT_TRUE(v.lifts(v.index("EPI"), v.index("MONO")));
  auto w = enumerate_wfs(v);
  EXPECT_EQ(w, expected_wfs(v, {{"hom", "iso"}, {"mon", "epi"}, {"epi", "mon"}, {"iso", "hom"}}));
  EXPECT_EQ(wfs_hasse(w).size(), 4u);
  auto search = enumerate_model_structures(v);
  EXPECT_EQ(ms_keys(search.structures), ms_keys(v, {{"iso", "hom", "hom"},
                                                    {"mon", "epi", "hom"},
                                                    {"epi", "mon", "hom"},
                                                    {"hom", "iso", "hom"},
                                                    {"hom", "hom", "iso"}}));
}

TEST(ArchetypeSystem, NonUniformTablesRejected) {
  auto t = vect_system().tables();
  t.non_uniform.push_back({1, 2, "a", "b"});
  EXPECT_THROW(ArchetypeSystem{t}, TableError);
}

TEST(ArchetypeSystem, NamesRoundTrip) {
  for (auto k : {SystemKind::Set, SystemKind::Pointed, SystemKind::Vect}) {
    EXPECT_EQ(parse_system_kind(to_string(k)), k);
    for (unsigned f : canonical_flag_order(k)) EXPECT_EQ(archetype_flags(k, archetype_name(k, f)), f);
  }
  EXPECT_EQ(archetype_name(SystemKind::Pointed, flags::kPointedSurjective), "Sbo");
  EXPECT_FALSE(parse_system_kind("groups"));
}

}  // namespace
}  // namespace wfs
