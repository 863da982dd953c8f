#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ggk/io.hpp"

namespace ggk {

struct CriterionResult {
  std::string name;
  bool pass = true;
  int cases = 0;                        // instances checked
  std::vector<std::string> mismatches;  // serialized reproducers (capped)
  double wall_ms = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::string field;  // "q" (rationals) or "p" (a 32003-element field)
  std::vector<CriterionResult> criteria;
  double wall_ms = 0.0;

  bool pass() const;
};

/* Runs one verification suite: "all", "int-dim", "smoothing", or "koszul".
   Deterministic for a fixed seed; unknown suite or field is an InputError. */
VerifyReport run_verify(const std::string& suite, std::uint64_t seed,
                        const std::string& field);

ojson report_to_json(const VerifyReport& r);
std::string report_to_text(const VerifyReport& r);

}  // namespace ggk
