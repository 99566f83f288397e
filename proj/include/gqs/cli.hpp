#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace gqs::cli {

struct Result {
  std::string output;      // JSON document for stdout; empty when exit_code == 1
  std::string diagnostic;  // human-readable context for stderr; empty on success
  int exit_code = 0;       // 0 ok, 1 malformed input / schema violation, 2 domain rejection
};

/// Executes one JSON command envelope {"command", "payload", "tolerances"?}.
/// Never throws; all failures are encoded in the Result. Output is
/// deterministic: fixed key order, shortest round-trip number formatting.
Result execute(const std::string& envelope_text,
               std::optional<double> tol_override = std::nullopt,
               std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace gqs::cli
