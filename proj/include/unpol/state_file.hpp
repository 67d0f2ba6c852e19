#pragma once

// Text state files.
//
//   {
//     "format_version": 1,
//     "kind": "density",
//     "n_max": 2,
//     "blocks": [
//       {"n": 0, "matrix": [[1, 0]]},
//       {"n": 2, "matrix": [[re, im], ...]}      row-major, (n+1)^2 pairs
//     ],
//     "metadata": {"label": "...", "truncation_deficit": 0}
//   }
//
// Omitted manifolds are zero blocks. Output is canonical: fixed key order,
// doubles with 17 significant digits, so save -> load -> save is byte-exact.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "unpol/states.hpp"

namespace unpol {

inline constexpr int kStateFormatVersion = 1;
inline constexpr int kMaxFileManifold = 1000;

class StateFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StateFile {
  DensityOperator rho;
  std::string label;
};

/// Canonical text for any JSON document: objects keep insertion order,
/// arrays of scalars stay on one line, doubles use %.17g.
std::string canonical_json(const nlohmann::ordered_json& doc);

nlohmann::ordered_json state_to_json(const DensityOperator& rho,
                                     const std::string& label = {});
std::string serialize_state(const DensityOperator& rho, const std::string& label = {});

/// Throws StateFileError for malformed documents or invalid density operators.
StateFile parse_state(std::string_view text);

StateFile read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const DensityOperator& rho,
                      const std::string& label = {});

}  // namespace unpol
