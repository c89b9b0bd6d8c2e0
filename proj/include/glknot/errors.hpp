#ifndef GLKNOT_ERRORS_HPP
#define GLKNOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glknot {

// Malformed input file (ragged rows, non-numeric cells).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape constraints violated (n < 3, p < 2, subsample out of range, ...).
struct dimension_error : std::invalid_argument {
  explicit dimension_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A data column with zero sample variance.
struct degenerate_column_error : std::invalid_argument {
  explicit degenerate_column_error(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace glknot

#endif
