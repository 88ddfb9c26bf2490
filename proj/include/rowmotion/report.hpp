#pragma once

/**
 * @file report.hpp
 * @brief Outcome record shared by the verification checks.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace rowmotion {

struct Report {
  std::string name;
  bool passed = true;
  std::uint64_t seed = 0;
  long trials = 0;
  /// Counterexamples, each rendered as a self-contained string.
  std::vector<std::string> witnesses;
  /// Free-form key facts, e.g. observed periods or set sizes.
  std::vector<std::string> details;

  void fail(std::string witness) {
    passed = false;
    if (witnesses.size() < 20) witnesses.push_back(std::move(witness));
  }
  void note(std::string detail) { details.push_back(std::move(detail)); }
};

}  // namespace rowmotion
