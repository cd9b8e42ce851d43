#include "pbwkit/cli/report.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include "json.hpp"
#include <sstream>

namespace pbwkit::cli {

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return kPass;
    case Status::Fail: return kFail;
    case Status::Undecided: return kUndecided;
  }
  return kUndecided;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

std::string render_json(const VerdictReport& report, const RunInfo& info, int code) {
  using json = nlohmann::ordered_json;
  json j;
  j["tool"] = "pbwkit";
  j["version"] = kToolVersion;
  j["command"] = info.command;
  j["input"] = info.input;
  j["input_sha256"] = info.digest;
  j["field"] = info.field;
  j["bounds"] = {{"deg_max", info.deg_max},
                 {"n_max", info.n_max},
                 {"n_sat", info.n_sat},
                 {"seed", info.seed},
                 {"trial_budget", info.trial_budget}};
  j["title"] = report.title;
  j["checks"] = json::array();
  for (const auto& c : report.checks) {
    json cj{{"name", c.name}, {"status", status_name(c.status)}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    if (!c.witness.empty()) cj["witness"] = c.witness;
    j["checks"].push_back(std::move(cj));
  }
  j["tables"] = json::array();
  for (const auto& t : report.tables) j["tables"].push_back({{"name", t.name}, {"header", t.header}, {"rows", t.rows}});
  j["notes"] = report.notes;
  j["overall"] = status_name(report.overall());
  j["exit_code"] = code;
  if (info.elapsed_ms) j["elapsed_ms"] = *info.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string render_text(const VerdictReport& report, const RunInfo& info, int code) {
  std::ostringstream out;
  out << "pbwkit " << info.command << " " << info.input << "\n";
  if (!report.title.empty()) out << report.title << " over " << info.field << "\n";
  for (const auto& c : report.checks) {
    out << "  [" << status_name(c.status) << "] " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
    if (!c.witness.empty()) out << "      witness: " << c.witness << "\n";
  }
  for (const auto& t : report.tables) {
    out << t.name << "\n";
    std::vector<std::size_t> width(t.header.size(), 0);
    for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
    for (const auto& r : t.rows)
      for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto row = [&](const std::vector<std::string>& cells) {
      out << " ";
      for (std::size_t i = 0; i < cells.size(); ++i) out << " " << std::setw(static_cast<int>(width[i])) << cells[i];
      out << "\n";
    };
    row(t.header);
    for (const auto& r : t.rows) row(r);
  }
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  out << "overall: " << status_name(report.overall()) << " (exit " << code << ")\n";
  if (info.elapsed_ms) out << "elapsed: " << std::fixed << std::setprecision(1) << *info.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace pbwkit::cli
