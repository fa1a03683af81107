#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "torelli/surgery.hpp"

namespace torelli {

class KnotDocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Knot document, JSON:
///   { "name": "trefoil",
///     "conway": [[0, 1], [2, 1]],             exponent/coefficient pairs
///     "jones":  [[1, 1], [3, 1], [4, -1]],
///     "bscc_basis": ["a1 + b1", "a2 - b1 + b2"] }   optional
/// Throws KnotDocumentError on malformed input.
KnotRecord parse_knot_document(std::string_view text);
KnotRecord load_knot_document(const std::filesystem::path& path);
std::string knot_document(const KnotRecord& k);

}  // namespace torelli
