#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace sgasym {

/// Outcome of a batch of exact identity checks. Failures are entries, not exceptions.
struct VerificationReport {
  struct Entry {
    std::string name;
    bool pass = false;
    std::string detail;  // residual rendering on failure, free text otherwise
  };

  std::vector<Entry> entries;

  void add(std::string name, bool pass, std::string detail = {}) {
    entries.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const {
    return std::ranges::all_of(entries, [](const Entry& e) { return e.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::ranges::count_if(entries, [](const Entry& e) { return !e.pass; }));
  }
};

}  // namespace sgasym
