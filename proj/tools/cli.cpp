#include "cli.hpp"

#include <charconv>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include "demo.hpp"
#include <nlohmann/json.hpp>
#include "pgsem/engine.hpp"
#include "pgsem/error.hpp"

namespace pgsem::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kAllLimit = 256;

struct Options {
  std::string lexicon_path;
  std::string target = "s";
  std::string mode;
  std::string format;
  bool all = false;
  bool json_flag = false;
  std::optional<std::uint64_t> seed;
  std::string assets_dir;
  std::vector<std::string> sentences;
};

std::string number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string basis_label(std::size_t offset, const Shape& shape) {
  if (shape.rank() == 0) return "1";
  std::vector<std::size_t> idx(shape.rank());
  for (std::size_t axis = shape.rank(); axis-- > 0;) {
    idx[axis] = offset % shape[axis];
    offset /= shape[axis];
  }
  std::string out = "|";
  for (std::size_t a = 0; a < idx.size(); ++a)
    out += (a ? "," : "") + std::to_string(idx[a]);
  return out + ">";
}

// Bundles the common "load lexicon, parse target, tokenize" steps.
struct Session {
  Lexicon lexicon;
  PregroupType target;
};

Session open_session(const Options& o) {
  if (o.lexicon_path.empty())
    throw Error(ErrorCode::SchemaError, "--lexicon is required");
  Session s{load_lexicon_file(o.lexicon_path), {}};
  s.target = parse_type(o.target, s.lexicon.registry());
  return s;
}

json diagram_json(const ReductionDiagram& d) {
  json links = json::array();
  for (const auto& [a, b] : d.links) links.push_back({a, b});
  return {{"links", links}, {"survivors", d.survivors}};
}

std::string typings_of(const Lexicon& lex, const std::string& word) {
  std::string out;
  for (const auto& e : *lex.lookup(word)) {
    if (!out.empty()) out += " | ";
    out += format_type(e.typing.simples, lex.registry());
  }
  return out;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Session s = open_session(o);
  const auto tokens = tokenize(o.sentences.at(0));
  std::optional<Analysis> analysis;
  try {
    analysis = analyze(tokens, s.lexicon, s.target);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoReduction) throw;
  }
  const auto& reg = s.lexicon.registry();

  if (o.format == "json") {
    json doc{{"sentence", o.sentences[0]},
             {"target", format_type(s.target.simples, reg)},
             {"grammatical", analysis.has_value()}};
    json words = json::array();
    for (std::size_t w = 0; w < tokens.size(); ++w) {
      words.push_back(
          {{"word", tokens[w]},
           {"typing", analysis ? format_type(analysis->chosen[w].get()
                                                 .typing.simples,
                                             reg)
                               : typings_of(s.lexicon, tokens[w])}});
    }
    doc["words"] = words;
    if (analysis) {
      doc["flat_type"] = format_type(analysis->flat_types, reg);
      doc["diagram"] = diagram_json(analysis->diagram);
    }
    out << doc.dump(2) << "\n";
  } else {
    std::size_t width = 0;
    for (const auto& t : tokens) width = std::max(width, t.size());
    std::vector<SimpleType> flat;
    for (std::size_t w = 0; w < tokens.size(); ++w) {
      std::string typing;
      if (analysis) {
        const auto& simples = analysis->chosen[w].get().typing.simples;
        typing = format_type(simples, reg);
      } else {
        typing = typings_of(s.lexicon, tokens[w]);
      }
      out << tokens[w] << std::string(width - tokens[w].size() + 2, ' ')
          << typing << "\n";
    }
    if (analysis)
      out << "type: " << format_type(analysis->flat_types, reg) << " -> "
          << format_type(s.target.simples, reg) << "\n";
    out << (analysis ? "GRAMMATICAL" : "UNGRAMMATICAL") << "\n";
  }
  return analysis ? kExitOk : kExitLinguistic;
}

std::vector<Analysis> analyses_for(const Options& o, const Session& s,
                                   const std::string& sentence) {
  const auto tokens = tokenize(sentence);
  if (o.all) {
    auto all = analyze_all(tokens, s.lexicon, s.target, kAllLimit);
    if (all.empty()) throw Error(ErrorCode::NoReduction, "'" + sentence + "'");
    return all;
  }
  return {analyze(tokens, s.lexicon, s.target)};
}

int cmd_diagram(const Options& o, std::ostream& out) {
  const Session s = open_session(o);
  const auto& reg = s.lexicon.registry();
  const auto analyses = analyses_for(o, s, o.sentences.at(0));
  const std::string target_label = format_type(s.target.simples, reg);
  for (std::size_t i = 0; i < analyses.size(); ++i) {
    const auto& a = analyses[i];
    if (o.all) out << "# analysis " << i + 1 << " of " << analyses.size() << "\n";
    if (o.format == "dot") {
      out << render_dot(a.diagram, a.flat_types, reg, target_label);
    } else {
      out << render_ascii(a.diagram, a.flat_types, reg);
    }
  }
  return kExitOk;
}

int cmd_mean(const Options& o, std::ostream& out) {
  const Session s = open_session(o);
  const auto analyses = analyses_for(o, s, o.sentences.at(0));
  json results = json::array();
  for (const auto& a : analyses) {
    const Tensor v = compute_meaning(a, s.lexicon).vector;
    if (o.format == "json") {
      json basis = json::array();
      for (std::size_t i = 0; i < v.size(); ++i)
        basis.push_back(basis_label(i, v.shape()));
      results.push_back(
          {{"sentence", o.sentences[0]},
           {"target", format_type(s.target.simples, s.lexicon.registry())},
           {"semiring", std::string(s.lexicon.semiring().name())},
           {"shape", std::vector<std::size_t>(v.shape().dims().begin(),
                                              v.shape().dims().end())},
           {"basis", basis},
           {"values", std::vector<double>(v.data().begin(), v.data().end())},
           {"diagram", diagram_json(a.diagram)}});
    } else {
      for (std::size_t i = 0; i < v.size(); ++i)
        out << basis_label(i, v.shape()) << "  " << number(v.data()[i]) << "\n";
    }
  }
  if (o.format == "json") out << (o.all ? results : results[0]).dump(2) << "\n";
  return kExitOk;
}

int cmd_sim(const Options& o, std::ostream& out) {
  if (o.sentences.size() != 2)
    throw Error(ErrorCode::SchemaError, "sim needs two sentences");
  const Session s = open_session(o);
  const std::string mode = o.mode.empty() ? "cosine" : o.mode;
  const double value =
      similarity(tokenize(o.sentences[0]), tokenize(o.sentences[1]), s.lexicon,
                 s.target,
                 mode == "raw" ? SimilarityMode::Raw : SimilarityMode::Cosine);
  if (o.format == "json") {
    out << json{{"s1", o.sentences[0]},
                {"s2", o.sentences[1]},
                {"mode", mode},
                {"similarity", value}}
               .dump(2)
        << "\n";
  } else {
    out << number(value) << "\n";
  }
  return kExitOk;
}

json vector_json(const std::vector<double>& v) { return v; }

std::string vector_text(const std::vector<double>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? ", " : "") + number(v[i]);
  return out + ")";
}

int cmd_demo(const Options& o, std::ostream& out) {
  const DemoLexicons lexicons = o.assets_dir.empty()
                                    ? load_embedded_lexicons()
                                    : load_lexicons_from(o.assets_dir);
  const DemoReport report = run_demo(lexicons, o.seed);
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.passed() ? 1 : 0;

  if (o.format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks) {
      json cases = json::array();
      for (const auto& k : c.cases) {
        cases.push_back({{"label", k.label},
                         {"expected", vector_json(k.expected)},
                         {"computed", vector_json(k.computed)},
                         {"passed", k.passed()}});
      }
      checks.push_back({{"id", c.id},
                        {"title", c.title},
                        {"passed", c.passed()},
                        {"cases", cases}});
    }
    out << json{{"passed", report.passed()},
                {"total", report.checks.size()},
                {"passed_count", passed},
                {"checks", checks}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed() ? "PASS  " : "FAIL  ") << c.id << "  " << c.title
          << "\n";
      for (const auto& k : c.cases) {
        out << "        " << k.label << " = " << vector_text(k.computed)
            << "  expected " << vector_text(k.expected) << "\n";
      }
    }
    out << passed << "/" << report.checks.size() << " checks passed\n";
  }
  return report.passed() ? kExitOk : kExitLinguistic;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoReduction:
    case ErrorCode::ZeroVector:
      return kExitLinguistic;
    default:
      return kExitInput;
  }
}

void add_common(CLI::App* sub, Options& o, bool sentence_required,
                std::size_t sentence_count) {
  sub->add_option("--lexicon", o.lexicon_path, "lexicon JSON file");
  sub->add_option("--target", o.target, "target pregroup type")
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "seed for randomized checks");
  if (sentence_count > 0) {
    auto* opt = sub->add_option("sentences", o.sentences, "quoted sentence(s)")
                    ->expected(static_cast<int>(sentence_count));
    if (sentence_required) opt->required();
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Pregroup grammar and compositional distributional semantics"};
  app.name("pgsem");
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "type-check a sentence");
  add_common(check, o, true, 1);
  check->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--json", o.json_flag);

  auto* diagram = app.add_subcommand("diagram", "render the reduction diagram");
  add_common(diagram, o, true, 1);
  diagram->add_option("--format", o.format)
      ->check(CLI::IsMember({"ascii", "dot", "text"}));
  diagram->add_flag("--all", o.all, "every analysis");

  auto* mean = app.add_subcommand("mean", "compute the sentence meaning");
  add_common(mean, o, true, 1);
  mean->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  mean->add_flag("--json", o.json_flag);
  mean->add_flag("--all", o.all, "every analysis");

  auto* sim = app.add_subcommand("sim", "similarity of two sentences");
  add_common(sim, o, true, 2);
  sim->add_option("--mode", o.mode)->check(CLI::IsMember({"raw", "cosine"}));
  sim->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  sim->add_flag("--json", o.json_flag);

  auto* demo = app.add_subcommand("demo", "reproduce the worked examples");
  add_common(demo, o, false, 0);
  demo->add_option("--assets", o.assets_dir,
                   "directory holding paper.json, paper_1d.json, "
                   "paper_bool.json (default: built-in copies)");
  demo->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  demo->add_flag("--json", o.json_flag);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }
  if (o.json_flag) o.format = "json";

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (diagram->parsed()) return cmd_diagram(o, out);
    if (mean->parsed()) return cmd_mean(o, out);
    if (sim->parsed()) return cmd_sim(o, out);
    if (demo->parsed()) return cmd_demo(o, out);
  } catch (const Error& e) {
    err << "pgsem: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "pgsem: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace pgsem::cli
