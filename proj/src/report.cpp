#include "hqft/report.hpp"

#include <algorithm>
#include <sstream>

namespace hqft {

bool Report::passed() const {
  return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; });
}

void Report::add(std::string check, std::string expected, std::string actual, bool pass, std::string witness) {
  if (!pass && witness.empty()) witness = "expected " + expected + ", got " + actual;
  items.push_back({std::move(check), std::move(expected), std::move(actual), std::move(witness), pass});
}

void Report::append(const Report& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }

std::string Report::to_text() const {
  std::ostringstream os;
  if (!title.empty()) os << title << '\n';
  size_t width = 0;
  for (const auto& i : items) width = std::max(width, i.check.size());
  for (const auto& i : items) {
    os << (i.pass ? "PASS  " : "FAIL  ") << i.check << std::string(width - i.check.size() + 2, ' ') << i.actual;
    if (!i.pass) os << "  (expected " << i.expected << "; witness: " << i.witness << ')';
    os << '\n';
  }
  os << (passed() ? "status: pass" : "status: fail") << '\n';
  return os.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json items_json = nlohmann::json::array();
  for (const auto& i : items) {
    nlohmann::json j{{"check", i.check}, {"expected", i.expected}, {"actual", i.actual}, {"pass", i.pass}};
    if (!i.witness.empty()) j["witness"] = i.witness;
    items_json.push_back(j);
  }
  return {{"title", title}, {"status", passed() ? "pass" : "fail"}, {"items", items_json}};
}

}  // namespace hqft
