#include "cliquedim/report.hpp"

#include <algorithm>

namespace cliquedim {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::warn: return "WARN";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

void CheckReport::add(std::string name, CheckStatus status, std::string detail) {
  entries_.push_back({std::move(name), status, std::move(detail)});
}

void CheckReport::expect(std::string name, bool ok, std::string detail) {
  add(std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail));
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (const auto& e : other.entries_) entries_.push_back({prefix + e.name, e.status, e.detail});
}

std::size_t CheckReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [&](const CheckEntry& e) { return e.status == status; }));
}

std::string CheckReport::render() const {
  std::string out;
  for (const auto& e : entries_) {
    out += to_string(e.status);
    out += ' ';
    out += e.name;
    if (!e.detail.empty()) {
      out += ' ';
      out += e.detail;
    }
    out += '\n';
  }
  return out;
}

}  // namespace cliquedim
