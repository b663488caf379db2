#pragma once

#include <string>
#include <vector>

#include "pgsem/pregroup.hpp"

namespace pgsem::detail {

// Coverage, ordering, and planarity checks only; no type information.
std::vector<std::string> structural_problems(const ReductionDiagram& diagram,
                                             std::size_t type_count);

}  // namespace pgsem::detail
