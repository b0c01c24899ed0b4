#include "utlab/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "utlab/core.hpp"

namespace utlab {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Undecided: return "undecided";
    case Verdict::Error: return "error";
  }
  return "error";
}

Verdict parse_verdict(const std::string& text) {
  for (Verdict v : {Verdict::Holds, Verdict::Fails, Verdict::Undecided, Verdict::Error})
    if (to_string(v) == text) return v;
  throw InvalidArgument("report: unknown verdict '" + text + "'");
}

int Report::exit_code() const {
  if (!error.empty()) return 2;
  bool failed = false;
  for (const auto& e : entries) {
    if (e.verdict == Verdict::Error || e.verdict == Verdict::Undecided) return 2;
    failed = failed || e.verdict == Verdict::Fails;
  }
  return failed ? 1 : 0;
}

namespace {

json entry_json(const ReportEntry& e) {
  return {{"label", e.label},     {"verdict", to_string(e.verdict)}, {"method", e.method},
          {"witness", e.witness}, {"info", e.info},                  {"seconds", e.seconds}};
}

ReportEntry entry_from(const json& j) {
  ReportEntry e;
  e.label = j.at("label").get<std::string>();
  e.verdict = parse_verdict(j.at("verdict").get<std::string>());
  e.method = j.at("method").get<std::string>();
  e.witness = j.at("witness").get<std::map<std::string, std::string>>();
  e.info = j.at("info").get<std::map<std::string, std::string>>();
  e.seconds = j.at("seconds").get<double>();
  return e;
}

}  // namespace

std::string to_json(const Report& r, int indent) {
  json j;
  j["command"] = r.command;
  if (r.group)
    j["group"] = {{"name", r.group->name}, {"degree", r.group->degree}, {"order", r.group->order}};
  else
    j["group"] = nullptr;
  j["entries"] = json::array();
  for (const auto& e : r.entries) j["entries"].push_back(entry_json(e));
  j["columns"] = r.columns;
  j["rows"] = r.rows;
  j["error"] = r.error;
  j["seconds"] = r.seconds;
  j["exit_code"] = r.exit_code();
  return j.dump(indent);
}

Report report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Report r;
    r.command = j.at("command").get<std::string>();
    if (!j.at("group").is_null()) {
      const auto& g = j.at("group");
      r.group = GroupInfo{g.at("name").get<std::string>(), g.at("degree").get<std::size_t>(),
                          g.at("order").get<std::string>()};
    }
    for (const auto& e : j.at("entries")) r.entries.push_back(entry_from(e));
    r.columns = j.at("columns").get<std::vector<std::string>>();
    r.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    r.error = j.at("error").get<std::string>();
    r.seconds = j.at("seconds").get<double>();
    return r;
  } catch (const json::exception& ex) {
    throw InvalidArgument(std::string("report: ") + ex.what());
  }
}

std::string to_text(const Report& r, bool show_witness) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  if (r.group)
    out << "group:   " << r.group->name << ", degree " << r.group->degree << ", order "
        << r.group->order << "\n";
  for (const auto& e : r.entries) {
    out << e.label << ": " << to_string(e.verdict);
    if (!e.method.empty()) out << " [" << e.method << "]";
    out << std::fixed << std::setprecision(3) << " (" << e.seconds << " s)\n";
    if (show_witness)
      for (const auto& [k, v] : e.witness) out << "  witness " << k << ": " << v << "\n";
    for (const auto& [k, v] : e.info) out << "  " << k << ": " << v << "\n";
  }
  if (!r.columns.empty()) {
    std::vector<std::size_t> width(r.columns.size());
    for (std::size_t c = 0; c < r.columns.size(); ++c) width[c] = r.columns[c].size();
    for (const auto& row : r.rows)
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
        width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size() && c < width.size(); ++c)
        out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << cells[c];
      out << "\n";
    };
    line(r.columns);
    for (const auto& row : r.rows) line(row);
  }
  if (!r.error.empty()) out << "error: " << r.error << "\n";
  out << std::fixed << std::setprecision(3) << "time:    " << r.seconds << " s\n";
  return out.str();
}

}  // namespace utlab
