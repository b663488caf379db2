#include <algorithm>
#include <sstream>

#include "detail.hpp"
#include "pgsem/error.hpp"
#include "pgsem/pregroup.hpp"

namespace pgsem {

namespace {

void require_structurally_valid(const ReductionDiagram& diagram,
                                std::size_t type_count) {
  auto problems = detail::structural_problems(diagram, type_count);
  if (!problems.empty()) throw Error(ErrorCode::InvalidDiagram, problems[0]);
}

// Innermost cups are level 1; a cup sits one level below everything it
// encloses.
std::vector<std::size_t> link_levels(const ReductionDiagram& diagram) {
  std::vector<std::size_t> order(diagram.links.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto span = [&](std::size_t i) {
    return diagram.links[i].right - diagram.links[i].left;
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return span(a) < span(b); });

  std::vector<std::size_t> level(diagram.links.size(), 1);
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const Link& outer = diagram.links[order[oi]];
    for (std::size_t ii = 0; ii < oi; ++ii) {
      const Link& inner = diagram.links[order[ii]];
      if (outer.left < inner.left && inner.right < outer.right)
        level[order[oi]] = std::max(level[order[oi]], level[order[ii]] + 1);
    }
  }
  return level;
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_ascii(const ReductionDiagram& diagram,
                         std::span<const SimpleType> types,
                         const TypeRegistry& registry) {
  require_structurally_valid(diagram, types.size());
  if (types.empty()) return {};

  std::vector<std::size_t> column(types.size());
  std::string header;
  for (std::size_t p = 0; p < types.size(); ++p) {
    if (p > 0) header += "  ";
    column[p] = header.size();
    header += format_simple(types[p], registry);
  }

  const auto level = link_levels(diagram);
  const std::size_t depth =
      std::max<std::size_t>(1, level.empty() ? 1 : *std::max_element(
                                                        level.begin(),
                                                        level.end()));

  std::string out = header + '\n';
  for (std::size_t row = 1; row <= depth; ++row) {
    std::string line(header.size(), ' ');
    for (std::size_t s : diagram.survivors) line[column[s]] = '|';
    for (std::size_t i = 0; i < diagram.links.size(); ++i) {
      const std::size_t a = column[diagram.links[i].left];
      const std::size_t b = column[diagram.links[i].right];
      if (level[i] > row) {
        line[a] = '|';
        line[b] = '|';
      } else if (level[i] == row) {
        line[a] = '\\';
        std::fill(line.begin() + static_cast<std::ptrdiff_t>(a) + 1,
                  line.begin() + static_cast<std::ptrdiff_t>(b), '_');
        line[b] = '/';
      }
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

std::string render_dot(const ReductionDiagram& diagram,
                       std::span<const SimpleType> types,
                       const TypeRegistry& registry,
                       std::string_view sink_label) {
  require_structurally_valid(diagram, types.size());

  std::ostringstream out;
  out << "graph reduction {\n";
  if (!types.empty()) out << "  node [shape=plaintext];\n";
  for (std::size_t p = 0; p < types.size(); ++p) {
    out << "  p" << p << " [label=\""
        << dot_escape(format_simple(types[p], registry)) << "\"];\n";
  }
  for (const auto& [a, b] : diagram.links)
    out << "  p" << a << " -- p" << b << ";\n";
  if (!diagram.survivors.empty()) {
    std::string label(sink_label);
    if (label.empty()) {
      std::vector<SimpleType> rest;
      for (std::size_t s : diagram.survivors) rest.push_back(types[s]);
      label = format_type(rest, registry);
    }
    out << "  sink [label=\"" << dot_escape(label) << "\", shape=box];\n";
    for (std::size_t s : diagram.survivors)
      out << "  p" << s << " -- sink;\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pgsem
