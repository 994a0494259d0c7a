#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hypcube/holonomy.hpp"
#include "hypcube/ribbon_graph.hpp"

namespace hypcube::cli {

/// Unreadable or malformed input file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"strands": [n_1, ...], "pairs": [[id, id], ...]}
EvenRibbonGraph load_graph(const std::string& path);

/// {"capped": [walk, ...]}
GluingSpec load_gluing(const std::string& path);

/// [s_1, s_2, ...]
ShearVector load_shears(const std::string& path);

}  // namespace hypcube::cli
