#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "pgsem/error.hpp"
#include "pgsem/pregroup.hpp"

using namespace pgsem;

namespace {

struct Fixture {
  TypeRegistry reg;
  TypePoset poset;
  Fixture() {
    for (const char* n : {"n", "s", "j", "sigma"}) reg.add(n);
    poset = TypePoset(reg.size());
  }
  PregroupType t(const char* text) const { return parse_type(text, reg); }
};

const char* kNegative = "n n^r s j^l sigma sigma^r j j^l sigma sigma^r j n^l n";

}  // namespace

TEST(ReduceTo, PositiveSentence) {
  Fixture f;
  const auto d = reduce_to(f.t("n n^r s n^l n").simples, f.t("s"), f.poset);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->links, (std::vector<Link>{{0, 1}, {3, 4}}));
  EXPECT_EQ(d->survivors, (std::vector<std::size_t>{2}));
  EXPECT_EQ(d->n, 5u);
}

TEST(ReduceTo, NegativeSentence) {
  Fixture f;
  const auto d = reduce_to(f.t(kNegative).simples, f.t("s"), f.poset);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->links, (std::vector<Link>{
                          {0, 1}, {3, 6}, {4, 5}, {7, 10}, {8, 9}, {11, 12}}));
  EXPECT_EQ(d->survivors, (std::vector<std::size_t>{2}));
}

TEST(ReduceTo, FailsWhenTypesDoNotCancel) {
  Fixture f;
  EXPECT_FALSE(reduce_to(f.t("n n n^r s").simples, f.t("s"), f.poset));
  EXPECT_FALSE(reduce_to(f.t("n^r n").simples, f.t("1"), f.poset));
  EXPECT_FALSE(reduce_to(f.t("n^r s n^l").simples, f.t("s"), f.poset));
  EXPECT_FALSE(reduce_to(f.t("s").simples, f.t("n"), f.poset));
}

TEST(ReduceTo, EmptyInputs) {
  Fixture f;
  const auto d = reduce_to({}, f.t("1"), f.poset);
  ASSERT_TRUE(d);
  EXPECT_TRUE(d->links.empty());
  EXPECT_TRUE(d->survivors.empty());
  EXPECT_FALSE(reduce_to({}, f.t("s"), f.poset));
}

TEST(ReduceTo, PrefersLinkingEarly) {
  Fixture f;
  // n^l n n^l n -> n^l n either by linking (0,1) or (2,3).
  const auto d = reduce_to(f.t("n^l n n^l n").simples, f.t("n^l n"), f.poset);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->links, (std::vector<Link>{{0, 1}}));
  EXPECT_EQ(d->survivors, (std::vector<std::size_t>{2, 3}));
}

TEST(ReduceTo, UsesPosetForSurvivors) {
  Fixture f;
  f.poset.add_order(*f.reg.find("n"), *f.reg.find("s"));
  const auto d = reduce_to(f.t("n").simples, f.t("s"), f.poset);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->survivors, (std::vector<std::size_t>{0}));
}

TEST(ReduceAll, EnumeratesAmbiguity) {
  Fixture f;
  const auto seq = f.t("n^l n n^l n").simples;
  const auto target = f.t("n^l n");
  const auto all = reduce_all(seq, target, f.poset, 10);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0], *reduce_to(seq, target, f.poset));
  EXPECT_EQ(all[1].links, (std::vector<Link>{{2, 3}}));
  for (const auto& d : all)
    EXPECT_TRUE(diagram_problems(d, seq, f.poset, &target).empty());
  EXPECT_EQ(reduce_all(seq, target, f.poset, 1).size(), 1u);
  EXPECT_TRUE(reduce_all(seq, target, f.poset, 0).empty());
}

TEST(ReduceAll, NestedReading) {
  Fixture f;
  // n^l n^l n n can only nest.
  const auto nested = reduce_all(f.t("n^l n^l n n").simples, f.t("1"), f.poset, 10);
  ASSERT_EQ(nested.size(), 1u);
  EXPECT_EQ(nested[0].links, (std::vector<Link>{{0, 3}, {1, 2}}));
}

TEST(Greedy, ContractsEagerly) {
  Fixture f;
  const auto g = greedy_reduce(f.t(kNegative).simples, f.poset);
  EXPECT_EQ(format_type(g.residual.simples, f.reg), "s");
  EXPECT_TRUE(diagram_problems(g.diagram, f.t(kNegative).simples, f.poset).empty());
}

TEST(Greedy, CanMissReductionsTheDpFinds) {
  Fixture f;
  // Eagerly linking (0,1) strands n^rr; keeping n and linking (1,2) works.
  const auto seq = f.t("n n^r n^rr").simples;
  const auto g = greedy_reduce(seq, f.poset);
  EXPECT_EQ(format_type(g.residual.simples, f.reg), "n^rr");
  EXPECT_TRUE(reduce_to(seq, f.t("n"), f.poset).has_value());
}

TEST(Validator, ReportsEachDefect) {
  Fixture f;
  const auto seq = f.t("n n^r s n^l n").simples;
  const auto s = f.t("s");
  ReductionDiagram ok{5, {{0, 1}, {3, 4}}, {2}};
  EXPECT_TRUE(diagram_problems(ok, seq, f.poset, &s).empty());

  ReductionDiagram missing{5, {{0, 1}}, {2}};
  EXPECT_FALSE(diagram_problems(missing, seq, f.poset).empty());

  ReductionDiagram crossing{5, {{0, 3}, {1, 4}}, {2}};
  EXPECT_FALSE(diagram_problems(crossing, seq, f.poset).empty());

  ReductionDiagram wrong_pair{5, {{1, 2}, {3, 4}}, {0}};
  EXPECT_FALSE(diagram_problems(wrong_pair, seq, f.poset).empty());

  const auto n = f.t("n");
  EXPECT_FALSE(diagram_problems(ok, seq, f.poset, &n).empty());

  ReductionDiagram covered{5, {{0, 4}}, {1, 2, 3}};
  EXPECT_FALSE(diagram_problems(covered, seq, f.poset).empty());

  ReductionDiagram bad_n{4, {{0, 1}, {3, 4}}, {2}};
  EXPECT_FALSE(diagram_problems(bad_n, seq, f.poset).empty());
}

TEST(ReduceTo, MatchesExhaustiveSearch) {
  gen::Rng rng(oracle::seed() + 101);
  TypePoset poset(3);
  for (int k = 0; k < 2000; ++k) {
    const auto seq = gen::sequence(rng, static_cast<std::size_t>(gen::uniform(rng, 0, 8)), 3, 2);
    PregroupType target;
    if (gen::uniform(rng, 0, 1)) target.simples.push_back(gen::simple(rng, 3, 2));
    oracle::ExhaustiveReducer brute(oracle::plain(target.simples), {});
    const auto d = reduce_to(seq, target, poset);
    ASSERT_EQ(d.has_value(), brute.reduces(oracle::plain(seq))) << "trial " << k;
    if (d) EXPECT_TRUE(diagram_problems(*d, seq, poset, &target).empty());
  }
}

TEST(ReduceTo, GrownSequencesReduce) {
  gen::Rng rng(oracle::seed() + 102);
  TypePoset poset(3);
  for (int k = 0; k < 2000; ++k) {
    const auto seq = gen::grow(rng, {}, static_cast<std::size_t>(gen::uniform(rng, 0, 5)), 3, 2, {});
    const auto d = reduce_to(seq, PregroupType{}, poset);
    ASSERT_TRUE(d.has_value());
    EXPECT_TRUE(d->survivors.empty());
    if (greedy_reduce(seq, poset).residual.is_unit()) {
      EXPECT_EQ(d->links.size() * 2, seq.size());
    }
  }
}
