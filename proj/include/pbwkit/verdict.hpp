#pragma once

#include <string>
#include <vector>

namespace pbwkit {

enum class Status { Pass, Fail, Undecided };

std::string status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Undecided;
  std::string detail;
  /// Human-readable witness (coordinates, indices); empty when passing.
  std::string witness;
};

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Structured pass/fail verdict. The overall status is Fail if any check
/// fails, else Undecided if any check is undecided, else Pass.
struct VerdictReport {
  std::string title;
  std::vector<Check> checks;
  std::vector<Table> tables;
  std::vector<std::string> notes;

  Check& add(std::string name, Status status, std::string detail = {}, std::string witness = {}) {
    checks.push_back({std::move(name), status, std::move(detail), std::move(witness)});
    return checks.back();
  }
  Check& add(std::string name, bool ok, std::string detail = {}, std::string witness = {}) {
    return add(std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail), std::move(witness));
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c && c->status == Status::Pass;
  }
  Status overall() const {
    bool undecided = false;
    for (const auto& c : checks) {
      if (c.status == Status::Fail) return Status::Fail;
      if (c.status == Status::Undecided) undecided = true;
    }
    return undecided ? Status::Undecided : Status::Pass;
  }
  /// Appends another report's checks with a name prefix.
  void merge(const VerdictReport& other, const std::string& prefix) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.status, c.detail, c.witness});
    for (const auto& t : other.tables) tables.push_back({prefix + t.name, t.header, t.rows});
    for (const auto& n : other.notes) notes.push_back(n);
  }
};

}  // namespace pbwkit
