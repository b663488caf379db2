#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pgsem/lexicon.hpp"

namespace pgsem::cli {

// The three bundled lexicons the worked examples run against.
struct DemoLexicons {
  Lexicon truth_1d;   // paper_1d.json: real, one-dimensional sentence space
  Lexicon graded;     // paper.json: real, S = J two-dimensional, does/not
  Lexicon relational; // paper_bool.json: boolean semiring
};

DemoLexicons load_embedded_lexicons();
DemoLexicons load_lexicons_from(const std::filesystem::path& dir);

std::string_view embedded_asset(std::string_view name);

struct DemoCase {
  std::string label;
  std::vector<double> expected;
  std::vector<double> computed;
  bool passed() const { return expected == computed; }
};

struct DemoCheck {
  std::string id;
  std::string title;
  std::vector<DemoCase> cases;
  bool passed() const;
};

struct DemoReport {
  std::vector<DemoCheck> checks;
  bool passed() const;
};

// Exact-equality reproduction of the worked examples. With a seed, two
// randomized property checks are appended.
DemoReport run_demo(const DemoLexicons& lexicons,
                    std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace pgsem::cli
