#pragma once

// Verification suites: each runs a fixed family of checks and reports
// expected and actual values as strings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eamod/io.hpp"

namespace eamod::cli {

struct SuiteOptions {
  std::optional<unsigned> p;
  std::optional<unsigned> k;
  std::optional<unsigned> ext;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> trials;
};

struct Check {
  std::string id;
  std::string description;
  std::string anchor;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool exploratory = false;
};

struct SuiteReport {
  std::string suite;
  Json parameters = Json::object();
  std::vector<Check> checks;
  Json details = Json::object();
  bool exploratory = false;

  /// True iff every non-exploratory check passes.
  bool passed() const;
};

/// Suite names accepted by run_suite, in acceptance order.
const std::vector<std::string>& suite_names();

/// BadParams for an unknown suite or unsupported parameters.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

Json suite_to_json(const SuiteReport& r);

}  // namespace eamod::cli
