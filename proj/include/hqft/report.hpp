#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace hqft {

struct ReportItem {
  std::string check;
  std::string expected;
  std::string actual;
  /// Empty for passing items; a failing item always carries a witness.
  std::string witness;
  bool pass = true;
};

struct Report {
  std::string title;
  std::vector<ReportItem> items;

  bool passed() const;
  void add(std::string check, std::string expected, std::string actual, bool pass, std::string witness = {});
  void append(const Report& other);

  std::string to_text() const;
  nlohmann::json to_json() const;
};

}  // namespace hqft
