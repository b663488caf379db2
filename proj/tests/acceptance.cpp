// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion holds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "demo.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "pgsem/engine.hpp"

using namespace pgsem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string values_of(const Tensor& t) {
  std::string s;
  for (double v : t.data()) s += (s.empty() ? "" : ",") + std::to_string(v);
  return "(" + s + ")";
}

Lexicon bundled(const char* name) {
  return load_lexicon(cli::embedded_asset(name));
}

// AC1
Outcome worked_examples() {
  Outcome o;
  const auto report = cli::run_demo(cli::load_embedded_lexicons());
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    if (c.passed()) {
      ++passed;
    } else {
      o.fail(c.id + " mismatch");
    }
  }
  if (report.checks.size() != 13) o.fail("expected 13 checks");

  // Cross-check the headline numbers against values written out here.
  const Lexicon two = bundled("paper.json");
  const auto s = two.type("s");
  const auto check = [&](const char* sentence, std::vector<double> want) {
    const Tensor got = sentence_meaning(sentence, two, s);
    if (std::vector<double>(got.data().begin(), got.data().end()) != want)
      o.fail(std::string(sentence) + " = " + values_of(got));
  };
  check("John likes Mary", {0.25, 0.75});
  check("John does not like Mary", {0.75, 0.25});
  const auto raw = [&](const char* a, const char* b) {
    return similarity(tokenize(a), tokenize(b), two, s, SimilarityMode::Raw);
  };
  if (raw("John loves Mary", "John likes Mary") != 0.75) o.fail("sim 3/4");
  if (raw("John hates Mary", "John likes Mary") != 0.25) o.fail("sim 1/4");
  if (raw("John loves Mary", "John hates Mary") != 0.0) o.fail("sim 0");
  if (raw("John does not love Mary", "John does not like Mary") != 0.75)
    o.fail("neg sim 3/4");
  if (raw("John does not like Mary", "John loves Mary") != 0.25)
    o.fail("mixed 1/4");
  if (raw("John does not like Mary", "John hates Mary") != 0.75)
    o.fail("mixed 3/4");
  if (raw("John does not like Mary", "John likes Mary") != 0.375)
    o.fail("mixed 3/8");

  // *34 on the boolean lexicon: exactly the pairs (1,1),(2,3),(3,4),(4,2).
  const Lexicon rel = bundled("paper_bool.json");
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const bool want = (i == 1 && j == 1) || (i == 2 && j == 3) ||
                        (i == 3 && j == 4) || (i == 4 && j == 2);
      const std::string sent =
          "m" + std::to_string(i) + " likes f" + std::to_string(j);
      const Tensor got = sentence_meaning(sent, rel, rel.type("s"));
      if (got.data()[0] != (want ? 1.0 : 0.0)) o.fail(sent);
    }
  }
  o.detail = std::to_string(passed) + "/" +
             std::to_string(report.checks.size()) + " demo checks" +
             (o.ok ? "" : "; " + o.detail);
  return o;
}

// AC2
Outcome reference_diagrams() {
  Outcome o;
  const Lexicon lex = bundled("paper.json");
  const auto s = lex.type("s");
  const auto pos = analyze(tokenize("John likes Mary"), lex, s).diagram;
  const auto neg = analyze(tokenize("John does not like Mary"), lex, s).diagram;
  const ReductionDiagram want_pos{5, {{0, 1}, {3, 4}}, {2}};
  const ReductionDiagram want_neg{
      13, {{0, 1}, {3, 6}, {4, 5}, {7, 10}, {8, 9}, {11, 12}}, {2}};
  if (pos != want_pos) o.fail("positive diagram differs");
  if (neg != want_neg) o.fail("negative diagram differs");
  o.detail = "positive and negative sentence diagrams";
  return o;
}

// AC3
Outcome oracle_equivalence() {
  Outcome o;
  gen::Rng rng(oracle::seed());
  std::size_t trials = 0;
  std::size_t reducible = 0;
  for (int poset_variant = 0; poset_variant < 2; ++poset_variant) {
    oracle::TinyOrder order;
    TypePoset poset(3);
    if (poset_variant == 1) {
      order.pair = {0, 1};
      poset.add_order(BasicTypeId{0}, BasicTypeId{1});
    }
    for (int k = 0; k < 6000; ++k) {
      // Half purely random, half grown from the target so both outcomes are
      // well represented.
      PregroupType target;
      const int shape = gen::uniform(rng, 0, 2);
      for (int t = 0; t < shape; ++t) {
        auto x = gen::simple(rng, 3, 2);
        target.simples.push_back(x);
      }
      std::vector<SimpleType> seq;
      if (k % 2 == 0) {
        seq = gen::sequence(rng, static_cast<std::size_t>(gen::uniform(rng, 0, 10)),
                            3, 2);
      } else {
        const auto room = (10 - target.size()) / 2;
        seq = gen::grow(rng, target.simples,
                        static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(room))),
                        3, 2, order);
        // Occasionally perturb one position so near misses are covered too.
        if (!seq.empty() && gen::uniform(rng, 0, 3) == 0) {
          seq[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(seq.size()) - 1))] =
              gen::simple(rng, 3, 2);
        }
      }
      ++trials;
      oracle::ExhaustiveReducer brute(oracle::plain(target.simples), order);
      const bool expected = brute.reduces(oracle::plain(seq));
      const auto got = reduce_to(seq, target, poset);
      if (expected) ++reducible;
      if (got.has_value() != expected) {
        o.fail("disagreement on a sequence of length " +
               std::to_string(seq.size()));
        continue;
      }
      if (got) {
        const auto problems = diagram_problems(*got, seq, poset, &target);
        if (!problems.empty()) o.fail("invalid diagram: " + problems.front());
      }
    }
  }
  const std::string summary = std::to_string(trials) + " sequences, " +
                              std::to_string(reducible) + " reducible";
  o.detail = o.ok ? summary : summary + "; " + o.detail;
  return o;
}

// AC4
Outcome snake_equations() {
  Outcome o;
  gen::Rng rng(oracle::seed() + 4);
  std::size_t vectors = 0;
  double worst = 0.0;
  for (const Semiring sr :
       {Semiring::real(), Semiring::boolean(), Semiring::natural()}) {
    for (std::size_t d : {1u, 2u, 3u, 5u}) {
      const Tensor cap = eta(d, sr);
      for (int k = 0; k < 100; ++k) {
        const Tensor v = sr.kind() == SemiringKind::Real
                             ? gen::real_tensor(rng, Shape{d})
                             : gen::tensor(rng, Shape{d}, sr);
        // (1 (x) cup) o (cap (x) 1) and (cup (x) 1) o (1 (x) cap)
        const Tensor left = contract(tensor_product(cap, v), {{1, 2}});
        const Tensor right = contract(tensor_product(v, cap), {{0, 1}});
        ++vectors;
        for (std::size_t i = 0; i < d; ++i) {
          const double e1 = std::abs(left.data()[i] - v.data()[i]);
          const double e2 = std::abs(right.data()[i] - v.data()[i]);
          worst = std::max({worst, e1, e2});
          const double tol = sr.kind() == SemiringKind::Real ? 1e-12 : 0.0;
          if (e1 > tol || e2 > tol)
            o.fail(std::string(sr.name()) + " d=" + std::to_string(d));
        }
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu vectors, max deviation %.3g", vectors,
                worst);
  o.detail = o.ok ? buf : std::string(buf) + "; " + o.detail;
  return o;
}

// AC5
Outcome evaluation_equivalence() {
  Outcome o;
  gen::Rng rng(oracle::seed() + 5);
  std::size_t instances = 0;
  for (const Semiring sr :
       {Semiring::real(), Semiring::boolean(), Semiring::natural()}) {
    for (int k = 0; k < 400; ++k) {
      const auto inst = gen::instance(rng, sr);
      const Analysis a = analyze(inst.tokens, inst.lexicon, inst.target);
      const Tensor folded = compute_meaning(a, inst.lexicon).vector;
      const auto full = oracle::materialize(a, inst.lexicon);
      ++instances;
      if (std::vector<double>(folded.data().begin(), folded.data().end()) !=
          full)
        o.fail(std::string(sr.name()) + " instance " + std::to_string(k));
    }
  }
  o.detail = std::to_string(instances) + " instances" +
             (o.ok ? "" : "; " + o.detail);
  return o;
}

// AC6
Outcome algebra_laws() {
  Outcome o;
  gen::Rng rng(oracle::seed() + 6);
  const PregroupType unit;
  if (left_adjoint(unit) != unit || right_adjoint(unit) != unit)
    o.fail("unit is not self-adjoint");
  for (int k = 0; k < 10000; ++k) {
    PregroupType a{gen::sequence(rng, static_cast<std::size_t>(gen::uniform(rng, 0, 6)), 4, 7)};
    PregroupType b{gen::sequence(rng, static_cast<std::size_t>(gen::uniform(rng, 0, 6)), 4, 7)};
    if (right_adjoint(left_adjoint(a)) != a || left_adjoint(right_adjoint(a)) != a)
      o.fail("involution");
    if (left_adjoint(a * b) != left_adjoint(b) * left_adjoint(a))
      o.fail("left antihomomorphism");
    if (right_adjoint(a * b) != right_adjoint(b) * right_adjoint(a))
      o.fail("right antihomomorphism");
    if (a * unit != a || unit * a != a) o.fail("unit law");
    // a^l a and a a^r both reduce to the unit.
    TypePoset poset(4);
    const auto la = left_adjoint(a) * a;
    const auto ar = a * right_adjoint(a);
    if (!reduce_to(la.simples, unit, poset) || !reduce_to(ar.simples, unit, poset))
      o.fail("adjoint does not cancel");
  }
  o.detail = "10000 random compound types" + (o.ok ? "" : "; " + o.detail);
  return o;
}

Tensor random_verb(gen::Rng& rng) { return gen::real_tensor(rng, Shape{4, 2, 4}); }

LexiconEntry retensored(const Lexicon& lex, const char* word, Tensor t) {
  LexiconEntry e = lex.lookup(word)->front();
  e.tensor = std::move(t);
  return e;
}

// AC7
Outcome linearity() {
  Outcome o;
  gen::Rng rng(oracle::seed() + 7);
  const Lexicon base = bundled("paper.json");
  const auto s = base.type("s");
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  double worst = 0.0;
  const char* frames[] = {"m1 likes f2", "John likes Mary",
                          "John does not like Mary", "m4 does not like f3"};
  for (int k = 0; k < 100; ++k) {
    const double a = coef(rng);
    const double b = coef(rng);
    const Tensor p1 = random_verb(rng);
    const Tensor p2 = random_verb(rng);
    const char* sentence = frames[k % 4];
    const auto meaning = [&](const Tensor& verb) {
      Lexicon lex = base;
      lex.replace_entries("likes", {retensored(base, "likes", verb)});
      lex.replace_entries("like", {retensored(base, "like", verb)});
      return sentence_meaning(sentence, lex, s);
    };
    const Tensor mixed = meaning(add(scale(a, p1), scale(b, p2)));
    const Tensor split = add(scale(a, meaning(p1)), scale(b, meaning(p2)));
    for (std::size_t i = 0; i < mixed.size(); ++i)
      worst = std::max(worst, std::abs(mixed.data()[i] - split.data()[i]));
  }
  if (worst > 1e-9) o.fail("deviation above 1e-9");
  char buf[96];
  std::snprintf(buf, sizeof buf, "100 instances, max deviation %.3g", worst);
  o.detail = buf;
  return o;
}

// AC8
Outcome does_transparency() {
  Outcome o;
  gen::Rng rng(oracle::seed() + 8);
  const Lexicon base = bundled("paper.json");
  const auto s = base.type("s");
  std::vector<double> ident{1, 0, 0, 1};
  const Tensor identity(Shape{2, 2}, base.semiring(), ident);

  Lexicon lex = base;
  lex.replace_entries("not", {retensored(base, "not", build_not(4, identity))});
  const std::vector<std::string> subjects{"m1", "m2", "m3", "m4", "John"};
  const std::vector<std::string> objects{"f1", "f2", "f3", "f4", "Mary"};
  std::size_t compared = 0;
  const auto compare = [&](const Lexicon& l, const std::string& pos_verb,
                           const std::string& bare) {
    for (const auto& subj : subjects) {
      for (const auto& obj : objects) {
        const Tensor p = sentence_meaning(subj + " " + pos_verb + " " + obj, l, s);
        const Tensor n =
            sentence_meaning(subj + " does not " + bare + " " + obj, l, s);
        ++compared;
        if (p != n) o.fail(subj + " " + bare + " " + obj);
      }
    }
  };
  compare(lex, "loves", "love");
  compare(lex, "hates", "hate");
  compare(lex, "likes", "like");

  for (int k = 0; k < 100; ++k) {
    const Tensor psi = gen::tensor(rng, Shape{4, 2, 4}, base.semiring());
    Lexicon l = lex;
    l.replace_entries("likes", {retensored(base, "likes", psi)});
    l.replace_entries("like", {retensored(base, "like", psi)});
    const std::string subj = subjects[static_cast<std::size_t>(k) % 5];
    const std::string obj = objects[static_cast<std::size_t>(k / 5) % 5];
    const Tensor p = sentence_meaning(subj + " likes " + obj, l, s);
    const Tensor n = sentence_meaning(subj + " does not like " + obj, l, s);
    ++compared;
    if (p != n) o.fail("random verb " + std::to_string(k));
  }
  o.detail = std::to_string(compared) + " sentence pairs" +
             (o.ok ? "" : "; " + o.detail);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "worked examples reproduced exactly", worked_examples},
      {"AC2", "reduction diagrams", reference_diagrams},
      {"AC3", "reduce_to agrees with exhaustive search", oracle_equivalence},
      {"AC4", "snake equations", snake_equations},
      {"AC5", "fold equals full materialization", evaluation_equivalence},
      {"AC6", "pregroup algebra laws", algebra_laws},
      {"AC7", "meaning is linear in the verb", linearity},
      {"AC8", "does/not transparency", does_transparency},
  };
  std::printf("seed %llu\n", static_cast<unsigned long long>(oracle::seed()));
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
      r.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    std::printf("%s %s  %s  (%s, %.0f ms)\n", r.ok ? "PASS" : "FAIL", c.id,
                c.title, r.detail.c_str(), ms);
    failures += r.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
