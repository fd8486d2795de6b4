#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cliquedim {

enum class CheckStatus { pass, fail, warn, skip };

const char* to_string(CheckStatus status);

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

class CheckReport {
 public:
  void add(std::string name, CheckStatus status, std::string detail = {});
  /// PASS when `ok`, FAIL otherwise.
  void expect(std::string name, bool ok, std::string detail = {});
  void append(const CheckReport& other, const std::string& prefix = {});

  const std::vector<CheckEntry>& entries() const noexcept { return entries_; }
  std::size_t count(CheckStatus status) const;
  /// True when no entry failed; warnings and skips do not count against it.
  bool passed() const { return count(CheckStatus::fail) == 0; }

  /// One `<STATUS> <name> <detail>` line per entry.
  std::string render() const;

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace cliquedim
