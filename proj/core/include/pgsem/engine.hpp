#pragma once

// From word meanings to sentence meaning: pick typings, find a reduction,
// and evaluate the contraction network the reduction induces.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgsem/lexicon.hpp"
#include "pgsem/pregroup.hpp"
#include "pgsem/tensor.hpp"

namespace pgsem {

// Holds references into the Lexicon it was built from; the lexicon must
// outlive it.
struct Analysis {
  std::vector<std::string> tokens;
  std::vector<std::reference_wrapper<const LexiconEntry>> chosen;
  std::vector<SimpleType> flat_types;
  std::vector<std::size_t> offsets;  // first flat position of each token
  ReductionDiagram diagram;
  PregroupType target;
};

struct MeaningResult {
  Tensor vector;
  Analysis analysis;
};

enum class SimilarityMode { Raw, Cosine };

// Exact whitespace split.
std::vector<std::string> tokenize(std::string_view sentence);

// Tries typing combinations depth-first in lexicon order and returns the
// first one that reduces to `target`. Throws UnknownWord or NoReduction.
Analysis analyze(std::span<const std::string> tokens, const Lexicon& lexicon,
                 const PregroupType& target);

// Every (typing combination, diagram) pair, up to `limit`.
std::vector<Analysis> analyze_all(std::span<const std::string> tokens,
                                  const Lexicon& lexicon,
                                  const PregroupType& target,
                                  std::size_t limit);

// Left-to-right fold: each word is tensored onto the open boundary and every
// link whose endpoints are both open is contracted at once. Throws
// DimMismatch for links between spaces of different dimension.
MeaningResult compute_meaning(const Analysis& analysis, const Lexicon& lexicon);

Tensor sentence_meaning(std::string_view sentence, const Lexicon& lexicon,
                        const PregroupType& target);

// Raw: <f(s1) | f(s2)>. Cosine: raw / (|f(s1)| |f(s2)|), Real only.
double similarity(std::span<const std::string> s1,
                  std::span<const std::string> s2, const Lexicon& lexicon,
                  const PregroupType& target, SimilarityMode mode);

}  // namespace pgsem
