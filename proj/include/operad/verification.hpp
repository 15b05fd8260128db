#pragma once

// Mechanical re-derivation of the butterfly results: duality of Dend and Dias,
// the Dend[]Dias tableau and its dual, self-duality of X+/X-, the functors
// around the butterfly and the dimension/generating-series evidence.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "operad/catalog.hpp"

namespace operad {

enum class CheckStatus { pass, fail, finding };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string check_id;
  std::string claim;
  CheckStatus status = CheckStatus::fail;
  std::string expected;
  std::string actual;
  std::string witness;
  std::vector<std::string> requires_checks;
};

struct CheckReport {
  std::vector<CheckRecord> checks;
  std::vector<std::string> limitations;

  std::size_t count(CheckStatus s) const;
  bool all_passed() const { return count(CheckStatus::fail) == 0; }
  const CheckRecord* find(std::string_view id) const;
};

nlohmann::ordered_json to_json(const CheckReport& report);
// One line per check followed by a summary.
std::string to_text(const CheckReport& report);

struct VerifyOptions {
  int scan_radius = 2;          // grid {-r..r}^2 for the sixteenth-relation scan
  std::size_t x_max_weight = 4;  // X+/X- component dims are computed up to this arity
};

// Check ids in execution order; verify_all emits exactly these.
std::vector<std::string> verify_check_ids(const VerifyOptions& options = {});

CheckReport verify_all(const Catalog& catalog, const VerifyOptions& options = {});

using ScalarPair = std::pair<Rational, Rational>;

std::vector<ScalarPair> integer_grid(int radius);

// Pairs (alpha, beta) for which Dend[]Dias / (alpha r + beta s) is isomorphic to
// its dual through a signed relabeling.
std::vector<ScalarPair> sixteenth_relation_scan(const Catalog& catalog, const std::vector<ScalarPair>& grid);

}  // namespace operad
