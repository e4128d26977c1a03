#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace zariski {

using json = nlohmann::ordered_json;

/// A machine-readable run report: one config record, one record per item,
/// one summary record, emitted as JSON lines with insertion-ordered fields.
/// Identical config and seed must reproduce the bytes exactly, so nothing
/// time- or environment-dependent belongs in here.
class Report {
 public:
  Report(std::string command, json config) : command_(std::move(command)) {
    json rec;
    rec["record"] = "config";
    rec["command"] = command_;
    for (auto& [k, v] : config.items()) rec[k] = v;
    records_.push_back(std::move(rec));
  }

  void add_item(json fields) {
    json rec;
    rec["record"] = "item";
    rec["index"] = items_;
    for (auto& [k, v] : fields.items()) rec[k] = v;
    records_.push_back(std::move(rec));
    ++items_;
  }

  void count_pass() { ++pass_; }
  void count_fail() { ++fail_; }

  /// Adds an item carrying a verdict and bumps the matching counter.
  void add_checked_item(json fields, bool ok) {
    fields["ok"] = ok;
    add_item(std::move(fields));
    ok ? count_pass() : count_fail();
  }

  std::size_t pass() const { return pass_; }
  std::size_t fail() const { return fail_; }

  void write(std::ostream& os) const {
    for (const json& rec : records_) os << rec.dump() << '\n';
    json summary;
    summary["record"] = "summary";
    summary["pass"] = pass_;
    summary["fail"] = fail_;
    os << summary.dump() << '\n';
  }

  std::string to_string() const {
    std::string out;
    for (const json& rec : records_) {
      out += rec.dump();
      out += '\n';
    }
    json summary;
    summary["record"] = "summary";
    summary["pass"] = pass_;
    summary["fail"] = fail_;
    out += summary.dump();
    out += '\n';
    return out;
  }

  void write_file(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open report path " + path);
    os << to_string();
  }

 private:
  std::string command_;
  std::vector<json> records_;
  std::size_t items_ = 0;
  std::size_t pass_ = 0;
  std::size_t fail_ = 0;
};

}  // namespace zariski
