#pragma once

// Matrix files: {"field": "real"|"complex", "n1": k, "n2": m, "entries": [...]}
// with (n1 + n2)^2 row-major entries; complex entries are [re, im] pairs.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ppt/block.hpp"

namespace ppt::cli {

/// Malformed file or value list. `field()` names the offending key.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& detail)
      : std::runtime_error(field + ": " + detail), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

BlockMatrix parse_matrix(const nlohmann::json& doc);
BlockMatrix parse_matrix_text(const std::string& text);
/// Reads `path`, or standard input when `path` is "-".
BlockMatrix read_matrix_file(const std::string& path);

nlohmann::json matrix_to_json(const BlockMatrix& m);
/// One-line document; doubles use the shortest round-trip representation.
std::string format_matrix(const BlockMatrix& m);

/// Entries as JSON (numbers, or [re, im] pairs when complex).
nlohmann::json entries_to_json(const Matrix& m);

/// Column vector from a JSON array ("[1, 2]", "[[1, 0], 2]") or a comma
/// separated list ("1,2"). `name` labels errors.
Matrix parse_vector(const std::string& text, const std::string& name);

}  // namespace ppt::cli
