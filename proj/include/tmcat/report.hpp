#pragma once

// Check reports: a deterministic list of named checks with pass/fail and an
// optional witness.  Everything that validates structure returns one of these
// instead of throwing, so callers can show all failures at once.

#include <string>
#include <vector>

namespace tmcat {

struct ReportEntry {
  std::string check;
  bool pass = true;
  std::string witness;  // empty on pass; names the failing element otherwise
};

struct Report {
  std::vector<ReportEntry> entries;

  void add(std::string check, bool pass, std::string witness = "") {
    entries.push_back({std::move(check), pass, std::move(witness)});
  }

  void note(std::string check) { add(std::move(check), true); }

  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& e : other.entries)
      entries.push_back({prefix + e.check, e.pass, e.witness});
  }

  bool ok() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }

  std::vector<ReportEntry> failures() const {
    std::vector<ReportEntry> out;
    for (const auto& e : entries)
      if (!e.pass) out.push_back(e);
    return out;
  }

  std::string str() const {
    std::string out;
    for (const auto& e : entries) {
      out += e.pass ? "[ok]   " : "[FAIL] ";
      out += e.check;
      if (!e.witness.empty()) out += "  -- " + e.witness;
      out += "\n";
    }
    return out;
  }
};

}  // namespace tmcat
