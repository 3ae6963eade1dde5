#include "dedekind/peano/axioms.hpp"
#include "dedekind/peano/models.hpp"
#include "dedekind/peano/recursion.hpp"
#include "dedekind/peano/structure.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace dedekind::peano;

namespace {

const char* kLinear = "zero: 0\n0 -> 1\n1 -> 2\n2 -> 3\nfrontier: 3\n";
const char* kCycle = "zero: 0\n0 -> 1\n1 -> 2\n2 -> 0\n";
const char* kTwoComponents = "zero: 0\n0 -> 1\n1 -> 2\na -> b\nb -> a\nfrontier: 2\n";

std::vector<ElementId> ids(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

// Random structure on n elements; each element either has a random successor
// or sits on the frontier.
PointedStructure random_structure(std::mt19937_64& rng, std::size_t n) {
  std::vector<ElementId> elements;
  for (std::size_t i = 0; i < n; ++i) elements.push_back("e" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<PointedStructure::Edge> edges;
  std::vector<ElementId> frontier;
  for (const auto& e : elements) {
    if (rng() % 5 == 0) {
      frontier.push_back(e);
    } else {
      edges.emplace_back(e, elements[pick(rng)]);
    }
  }
  return PointedStructure(elements, elements[pick(rng)], edges, frontier);
}

bool stable(const PointedStructure& s, const std::set<ElementId>& m) {
  for (const auto& x : m) {
    const ElementId* next = s.successor(x);
    if (next && !m.contains(*next)) return false;
  }
  return true;
}

}  // namespace

TEST(Structure, ParsesAndFormats) {
  const auto s = parse_structure("# comment\nzero: 0\n\n0 -> 1\n1 -> 2\nfrontier: 2\n");
  EXPECT_EQ(s.zero(), "0");
  EXPECT_EQ(s.size(), 3u);
  ASSERT_NE(s.successor("0"), nullptr);
  EXPECT_EQ(*s.successor("0"), "1");
  EXPECT_EQ(s.successor("2"), nullptr);
  EXPECT_TRUE(s.is_frontier("2"));
  const auto again = parse_structure(format_structure(s));
  EXPECT_EQ(again.elements(), s.elements());
  EXPECT_EQ(again.edges(), s.edges());
  EXPECT_EQ(again.frontier(), s.frontier());
}

TEST(Structure, RejectsMalformedInput) {
  EXPECT_THROW(parse_structure("0 -> 1\n"), ModelError);
  EXPECT_THROW(parse_structure("zero: 0\n0 -> 1\n0 -> 2\nfrontier: 1,2\n"), ModelError);
  EXPECT_THROW(parse_structure("zero: 0\n0 -> 1\n"), ModelError);  // 1 has no successor
  EXPECT_THROW(parse_structure("zero: 0\n0 -> x-y\n"), ModelError);
  try {
    parse_structure("zero: 0\n0 -> 1\nbogus line\n");
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ChainOf, LinearFragment) {
  EXPECT_EQ(chain_of(parse_structure(kLinear), "0", 10).members, ids({"0", "1", "2", "3"}));
}

TEST(ChainOf, StopsAtRepeat) {
  EXPECT_EQ(chain_of(parse_structure(kCycle), "0", 10).members, ids({"0", "1", "2"}));
}

TEST(ChainOf, NeverLeavesComponent) {
  const auto c = chain_of(parse_structure(kTwoComponents), "0", 10);
  EXPECT_EQ(c.members, ids({"0", "1", "2"}));
  EXPECT_FALSE(c.contains("a"));
  EXPECT_FALSE(c.contains("b"));
}

TEST(ChainOf, DepthCountsSteps) {
  const auto s = parse_structure(kLinear);
  EXPECT_EQ(chain_of(s, "0", 0).members, ids({"0"}));
  EXPECT_EQ(chain_of(s, "0", 2).members, ids({"0", "1", "2"}));
}

TEST(ChainOf, UnknownSeed) {
  EXPECT_THROW(chain_of(parse_structure(kLinear), "9", 3), std::domain_error);
}

// The forward closure is the least stable set containing the seed.
TEST(ChainOf, EqualsIntersectionOfStableSubsets) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto s = random_structure(rng, n);
    for (const auto& seed : s.elements()) {
      const auto chain = chain_of(s, seed, n);
      const std::set<ElementId> cset(chain.members.begin(), chain.members.end());
      ASSERT_TRUE(stable(s, cset));

      std::set<ElementId> meet(s.elements().begin(), s.elements().end());
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::set<ElementId> m;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (1u << i)) m.insert(s.elements()[i]);
        }
        if (!m.contains(seed) || !stable(s, m)) continue;
        std::set<ElementId> next;
        std::set_intersection(meet.begin(), meet.end(), m.begin(), m.end(),
                              std::inserter(next, next.begin()));
        meet = std::move(next);
      }
      ASSERT_EQ(meet, cset) << format_structure(s) << "seed " << seed;
    }
  }
}

TEST(Axioms, LinearFragmentHolds) {
  const auto r = check_axioms(parse_structure(kLinear));
  EXPECT_TRUE(r.d1_holds);
  EXPECT_TRUE(r.d2_holds);
  EXPECT_TRUE(r.d3_holds);
  EXPECT_EQ(r.fragment_depth, 4u);
}

TEST(Axioms, CycleFailsD1) {
  const auto r = check_axioms(parse_structure(kCycle));
  EXPECT_FALSE(r.d1_holds);
  EXPECT_EQ(r.d1_counterexample, "2");
  EXPECT_TRUE(r.d2_holds);
  EXPECT_TRUE(r.d3_holds);
}

TEST(Axioms, DisjointCycleFailsD3) {
  const auto r = check_axioms(parse_structure(kTwoComponents));
  EXPECT_TRUE(r.d1_holds);
  EXPECT_TRUE(r.d2_holds);
  EXPECT_FALSE(r.d3_holds);
  EXPECT_EQ(r.d3_counterexample, "a");
}

TEST(Axioms, InjectivityFailure) {
  const auto r = check_axioms(parse_structure("zero: 0\n0 -> 2\n1 -> 2\nfrontier: 2\n"));
  EXPECT_FALSE(r.d2_holds);
  ASSERT_TRUE(r.d2_counterexample.has_value());
  EXPECT_NE(r.d2_counterexample->first, r.d2_counterexample->second);
}

TEST(Axioms, StrictModeAgreesOnSmallFragments) {
  std::mt19937_64 rng(126);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_structure(rng, 1 + rng() % kMaxStrictElements);
    const auto loose = check_axioms(s);
    const auto strict = check_axioms(s, InductionCheck::all_subsets);
    EXPECT_EQ(loose.d3_holds, strict.d3_holds) << format_structure(s);
  }
}

TEST(Axioms, StrictModeRefusesLargeFragments) {
  std::mt19937_64 rng(1);
  EXPECT_THROW(check_axioms(random_structure(rng, kMaxStrictElements + 1), InductionCheck::all_subsets),
               std::domain_error);
}

TEST(Axioms, JsonShape) {
  const auto j = to_json(check_axioms(parse_structure(kCycle)));
  EXPECT_EQ(j.at("d1"), false);
  EXPECT_EQ(j.at("d2"), true);
  EXPECT_EQ(j.at("counterexamples").at("d1"), "2");
  EXPECT_EQ(j.at("fragment_depth"), 3);
}

// Every reported counterexample reproduces the violation it names.
TEST(Axioms, CounterexamplesAreSound) {
  std::mt19937_64 rng(9);
  int failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = random_structure(rng, 1 + rng() % 10);
    const auto r = check_axioms(s);
    EXPECT_EQ(r.d1_holds, !r.d1_counterexample.has_value());
    EXPECT_EQ(r.d2_holds, !r.d2_counterexample.has_value());
    EXPECT_EQ(r.d3_holds, !r.d3_counterexample.has_value());
    if (r.d1_counterexample) {
      ASSERT_NE(s.successor(*r.d1_counterexample), nullptr);
      EXPECT_EQ(*s.successor(*r.d1_counterexample), s.zero());
    }
    if (r.d2_counterexample) {
      const auto& [a, b] = *r.d2_counterexample;
      EXPECT_NE(a, b);
      ASSERT_NE(s.successor(a), nullptr);
      ASSERT_NE(s.successor(b), nullptr);
      EXPECT_EQ(*s.successor(a), *s.successor(b));
    }
    if (r.d3_counterexample) {
      EXPECT_FALSE(chain_of(s, s.zero(), s.size()).contains(*r.d3_counterexample));
      EXPECT_FALSE(s.is_frontier(*r.d3_counterexample));
    }
    failures += !r.all_hold();
  }
  EXPECT_GT(failures, 0);
}

TEST(Iterate, Examples) {
  EXPECT_EQ(iterate(IterationSpec(0ull, [](unsigned long long v) { return v + 1; }), 7), 7u);
  EXPECT_EQ(iterate(IterationSpec(1ull, [](unsigned long long v) { return 2 * v; }), 10), 1024u);
  EXPECT_EQ(iterate(IterationSpec(std::string(), [](const std::string& v) { return v + "a"; }), 3), "aaa");
}

TEST(Iterate, IndexedExamples) {
  using U = unsigned long long;
  EXPECT_EQ(iterate_indexed(IterationSpec(U{1}, [](std::uint64_t x, U v) { return v * (x + 1); }), 5), 120u);
  EXPECT_EQ(iterate_indexed(IterationSpec(U{42}, [](std::uint64_t, U v) { return v; }), 9), 42u);
  EXPECT_EQ(iterate_indexed(IterationSpec(U{0}, [](std::uint64_t x, U v) { return v + 2 * x + 1; }), 6), 36u);
}

TEST(Iterate, TrajectoryLength) {
  const auto t = trajectory(IterationSpec(0, [](int v) { return v + 3; }), 4);
  EXPECT_EQ(t, (std::vector<int>{0, 3, 6, 9, 12}));
}

TEST(Iterate, PartialStepReportsIndex) {
  const IterationSpec spec(0, [](int v) -> std::optional<int> {
    if (v == 3) return std::nullopt;
    return v + 1;
  });
  try {
    iterate(spec, 10);
    FAIL();
  } catch (const IterationError& e) {
    EXPECT_EQ(e.index(), 3u);
  }
}

// Any map with psi(0) = w and psi(k+1) = theta(psi(k)) is the trajectory:
// rebuild it as a right fold theta(theta(...theta(w))) and compare.
TEST(Iterate, UniqueSolutionOfRecursionEquations) {
  std::mt19937_64 rng(159);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> table(64);
    for (auto& v : table) v = static_cast<int>(rng() % 64);
    const int omega = static_cast<int>(rng() % 64);
    const std::uint64_t n = rng() % 1001;
    const auto traj = trajectory(IterationSpec(omega, [&](int v) { return table[v]; }), n);
    ASSERT_EQ(traj.size(), n + 1);
    for (std::uint64_t k = 0; k <= n; k += 1 + rng() % 50) {
      std::function<int(std::uint64_t)> fold = [&](std::uint64_t i) { return i == 0 ? omega : table[fold(i - 1)]; };
      ASSERT_EQ(traj[k], fold(k));
    }
  }
}

TEST(Models, BuiltinEncodings) {
  EXPECT_EQ(unary_model().zero(), "");
  EXPECT_EQ(unary_model().successor("||"), "|||");
  EXPECT_EQ(binary_model().successor("0"), "1");
  EXPECT_EQ(binary_model().successor("1011"), "1100");
  EXPECT_EQ(binary_model().successor("111"), "1000");
  EXPECT_EQ(decimal_model().successor("199"), "200");
  EXPECT_EQ(binary_model().successor("012"), std::nullopt);
}

TEST(Models, RuleFragmentsSatisfyAxioms) {
  for (const auto& m : {unary_model(), binary_model(), decimal_model()}) {
    const auto frag = m.examined_fragment(50);
    EXPECT_EQ(frag.size(), 50u);
    EXPECT_TRUE(check_axioms(frag).all_hold()) << m.name();
  }
}

TEST(Iso, UnaryBinary) {
  const auto iso = build_iso(unary_model(), binary_model(), 4);
  const std::vector<std::pair<ElementId, ElementId>> want = {{"", "0"}, {"|", "1"}, {"||", "10"}, {"|||", "11"}};
  EXPECT_EQ(iso.pairs, want);
}

TEST(Iso, UnaryDecimal) {
  const auto iso = build_iso(unary_model(), decimal_model(), 3);
  const std::vector<std::pair<ElementId, ElementId>> want = {{"", "0"}, {"|", "1"}, {"||", "2"}};
  EXPECT_EQ(iso.pairs, want);
}

TEST(Iso, SelfIsIdentity) {
  for (const auto& m : {binary_model(), decimal_model()}) {
    for (const auto& [x, y] : build_iso(m, m, 40).pairs) EXPECT_EQ(x, y);
  }
  const Model linear(parse_structure(kLinear), "linear");
  for (const auto& [x, y] : build_iso(linear, linear, 4).pairs) EXPECT_EQ(x, y);
}

TEST(Iso, RefusesNonStandardModels) {
  const Model cycle(parse_structure(kCycle), "cycle");
  try {
    build_iso(unary_model(), cycle, 2);
    FAIL();
  } catch (const AxiomRefusal& e) {
    EXPECT_EQ(e.model(), "cycle");
    EXPECT_FALSE(e.report().d1_holds);
  }
}

TEST(Iso, ShortFragment) {
  const Model linear(parse_structure(kLinear), "linear");
  EXPECT_THROW(build_iso(linear, binary_model(), 5), std::domain_error);
  EXPECT_TRUE(build_iso(linear, binary_model(), 0).pairs.empty());
}

TEST(Iso, InverseAndCompose) {
  const auto ab = build_iso(binary_model(), decimal_model(), 300);
  const auto ba = build_iso(decimal_model(), binary_model(), 300);
  EXPECT_EQ(ab.inverse().pairs, ba.pairs);
  for (const auto& [x, y] : compose(ab, ba).pairs) EXPECT_EQ(x, y);
}
