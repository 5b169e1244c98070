#pragma once

#include <stdexcept>
#include <string>

namespace chiro {

// Malformed rational or polynomial text.
struct parse_error : std::invalid_argument {
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

// All 286 triple signs of a configuration are zero (rank < 3).
struct identically_zero_error : std::domain_error {
  explicit identically_zero_error(const std::string& what) : std::domain_error(what) {}
};

// Alternative base parameter u' hit one of the excluded values.
struct excluded_parameter_error : std::domain_error {
  explicit excluded_parameter_error(const std::string& what) : std::domain_error(what) {}
};

// The inequality route and the full-chirotope route of classify() disagreed.
// This would falsify the sign-system equivalence and must abort loudly.
struct internal_inconsistency_error : std::logic_error {
  explicit internal_inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

// path_exists() was asked about a node that is not in the graph.
struct node_absent_error : std::out_of_range {
  explicit node_absent_error(const std::string& what) : std::out_of_range(what) {}
};

// Render viewport is degenerate or contains no finite point of the input.
struct empty_viewport_error : std::domain_error {
  explicit empty_viewport_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace chiro
