#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "nilrep/lie_algebra.hpp"
#include "nilrep/representation.hpp"

namespace nilrep {

/// Raised for malformed or inconsistent input files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON object {"dim", "field", "brackets": [{"i", "j", "terms": [[k, "p/q"], ...]}], "names"?}
/// with 1-based indices and i < j. Unknown keys are rejected.
LieAlgebra parse_algebra(const std::string& text);
std::string emit_algebra(const LieAlgebra& g);

/// FNV-1a (64 bit) of the canonical algebra text without names, in hex.
std::string algebra_checksum(const LieAlgebra& g);

/// JSON object {"provenance": {"algorithm", "params"}, "algebra_checksum",
/// "field", "module_dim", "matrices": [[["p/q", ...], ...], ...]} with
/// row-major matrices. The algebra is supplied separately and must match the
/// checksum.
Representation parse_representation(const std::string& text, const LieAlgebra& g);
std::string emit_representation(const Representation& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// A file path, or "catalog:<spec>" naming a catalog algebra.
LieAlgebra load_algebra(const std::string& source, const Field& field);

}  // namespace nilrep
