#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace utlab {

enum class Verdict { Holds, Fails, Undecided, Error };

std::string to_string(Verdict v);
/// Inverse of to_string; throws InvalidArgument on anything else.
Verdict parse_verdict(const std::string& text);

struct GroupInfo {
  std::string name;
  std::size_t degree = 0;
  std::string order;  // decimal
  friend bool operator==(const GroupInfo&, const GroupInfo&) = default;
};

/// One verdict. Witness values are canonical text: sets "{1,2,4}",
/// partitions "1|2,4|3,5", maps "1,1,3".
struct ReportEntry {
  std::string label;
  Verdict verdict = Verdict::Undecided;
  std::string method;
  std::map<std::string, std::string> witness;
  std::map<std::string, std::string> info;
  double seconds = 0;
  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct Report {
  std::string command;
  std::optional<GroupInfo> group;
  std::vector<ReportEntry> entries;
  /// Optional table, e.g. the order table of the AGL criterion.
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::string error;
  double seconds = 0;

  /// 0 when every entry holds, 1 when some entry fails (and none is in
  /// error), 2 on an error or an undecided entry.
  int exit_code() const;

  friend bool operator==(const Report&, const Report&) = default;
};

std::string to_json(const Report& r, int indent = 2);
/// Throws InvalidArgument on malformed input.
Report report_from_json(const std::string& text);
/// Human-readable form; witness lines are left out unless show_witness.
std::string to_text(const Report& r, bool show_witness = true);

}  // namespace utlab
