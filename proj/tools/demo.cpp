#include "demo.hpp"

#include <algorithm>
#include <random>

#include "pgsem/engine.hpp"

namespace pgsem::cli {

bool DemoCheck::passed() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const DemoCase& c) { return c.passed(); });
}

bool DemoReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const DemoCheck& c) { return c.passed(); });
}

DemoLexicons load_embedded_lexicons() {
  return {load_lexicon(embedded_asset("paper_1d.json")),
          load_lexicon(embedded_asset("paper.json")),
          load_lexicon(embedded_asset("paper_bool.json"))};
}

DemoLexicons load_lexicons_from(const std::filesystem::path& dir) {
  return {load_lexicon_file(dir / "paper_1d.json"),
          load_lexicon_file(dir / "paper.json"),
          load_lexicon_file(dir / "paper_bool.json")};
}

namespace {

std::vector<double> values(const Tensor& t) {
  return {t.data().begin(), t.data().end()};
}

DemoCase meaning_case(const Lexicon& lex, const std::string& sentence,
                      std::vector<double> expected) {
  const auto s = lex.type("s");
  return {sentence, std::move(expected),
          values(sentence_meaning(sentence, lex, s))};
}

DemoCase raw_case(const Lexicon& lex, const std::string& a,
                  const std::string& b, double expected) {
  const auto s = lex.type("s");
  const double got = similarity(tokenize(a), tokenize(b), lex, s,
                                SimilarityMode::Raw);
  return {"<" + a + " | " + b + ">", {expected}, {got}};
}

Tensor random_verb(std::mt19937_64& rng, Semiring sr) {
  std::uniform_int_distribution<int> eighths(-8, 8);
  std::vector<double> data(4 * 2 * 4);
  for (double& v : data) v = eighths(rng) / 8.0;
  return Tensor(Shape{4, 2, 4}, sr, std::move(data));
}

LexiconEntry with_tensor(const Lexicon& lex, const std::string& word,
                         Tensor tensor) {
  LexiconEntry entry = lex.lookup(word)->front();
  entry.tensor = std::move(tensor);
  return entry;
}

DemoCheck seeded_linearity(const Lexicon& base, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> quarters(-8, 8);
  DemoCheck check{"seeded.linearity",
                  "meaning is linear in the verb tensor",
                  {}};
  for (int trial = 0; trial < 8; ++trial) {
    const double a = quarters(rng) / 4.0;
    const double b = quarters(rng) / 4.0;
    const Tensor psi1 = random_verb(rng, base.semiring());
    const Tensor psi2 = random_verb(rng, base.semiring());
    auto meaning_with = [&](const Tensor& verb) {
      Lexicon lex = base;
      lex.replace_entries("likes", {with_tensor(base, "likes", verb)});
      return sentence_meaning("John likes Mary", lex, lex.type("s"));
    };
    const Tensor mixed = meaning_with(add(scale(a, psi1), scale(b, psi2)));
    const Tensor split =
        add(scale(a, meaning_with(psi1)), scale(b, meaning_with(psi2)));
    check.cases.push_back({"trial " + std::to_string(trial), values(split),
                           values(mixed)});
  }
  return check;
}

DemoCheck seeded_transparency(const Lexicon& base, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  DemoCheck check{"seeded.transparency",
                  "does + identity-not leaves the verb meaning unchanged",
                  {}};
  const Semiring sr = base.semiring();
  const Tensor identity = map_to_state(eta(2, sr));
  for (int trial = 0; trial < 8; ++trial) {
    const Tensor psi = random_verb(rng, sr);
    Lexicon lex = base;
    lex.replace_entries("likes", {with_tensor(base, "likes", psi)});
    lex.replace_entries("like", {with_tensor(base, "like", psi)});
    lex.replace_entries("not",
                        {with_tensor(base, "not", build_not(4, identity))});
    const auto s = lex.type("s");
    check.cases.push_back(
        {"trial " + std::to_string(trial),
         values(sentence_meaning("John likes Mary", lex, s)),
         values(sentence_meaning("John does not like Mary", lex, s))});
  }
  return check;
}

}  // namespace

DemoReport run_demo(const DemoLexicons& lexicons,
                    std::optional<std::uint64_t> seed) {
  const Lexicon& one = lexicons.truth_1d;
  const Lexicon& two = lexicons.graded;
  const Lexicon& rel = lexicons.relational;

  // |0> = (1, 0) is false, |1> = (0, 1) is true.
  const std::vector<double> f2{1, 0};
  const std::vector<double> t2{0, 1};

  DemoReport r;
  r.checks.push_back({"ex1", "one-dimensional truth value",
                      {meaning_case(one, "John likes Mary", {1}),
                       meaning_case(one, "m1 likes f4", {0})}});
  r.checks.push_back({"ex1b", "two-dimensional truth value",
                      {meaning_case(two, "John loves Mary", t2),
                       meaning_case(two, "m1 loves f4", f2)}});
  r.checks.push_back({"ex2", "negative truth value",
                      {meaning_case(two, "John does not love Mary", f2),
                       meaning_case(two, "m1 does not love f4", t2)}});
  r.checks.push_back({"ex3", "hierarchical meaning, 3/4 loves + 1/4 hates",
                      {meaning_case(two, "John likes Mary", {0.25, 0.75})}});
  r.checks.push_back(
      {"ex4", "negative hierarchical meaning, 1/4 loves + 3/4 hates",
       {meaning_case(two, "John does not like Mary", {0.75, 0.25})}});
  r.checks.push_back(
      {"ex5a", "similarity of positive sentences",
       {raw_case(two, "John loves Mary", "John likes Mary", 0.75)}});
  r.checks.push_back(
      {"ex5b", "similarity of positive sentences",
       {raw_case(two, "John hates Mary", "John likes Mary", 0.25)}});
  r.checks.push_back(
      {"ex5c", "similarity of positive sentences",
       {raw_case(two, "John loves Mary", "John hates Mary", 0.0)}});
  r.checks.push_back({"ex6", "similarity of negative sentences",
                      {raw_case(two, "John does not love Mary",
                                "John does not like Mary", 0.75)}});
  r.checks.push_back({"ex7a", "positive vs negative",
                      {raw_case(two, "John does not like Mary",
                                "John loves Mary", 0.25)}});
  r.checks.push_back({"ex7b", "positive vs negative",
                      {raw_case(two, "John does not like Mary",
                                "John hates Mary", 0.75)}});
  r.checks.push_back({"ex7c", "positive vs negative",
                      {raw_case(two, "John does not like Mary",
                                "John likes Mary", 0.375)}});
  r.checks.push_back({"rel", "boolean semiring, *34",
                      {meaning_case(rel, "John likes Mary", {1}),
                       meaning_case(rel, "m1 likes f4", {0})}});
  if (seed) {
    r.checks.push_back(seeded_linearity(two, *seed));
    r.checks.push_back(seeded_transparency(two, *seed));
  }
  return r;
}

}  // namespace pgsem::cli
