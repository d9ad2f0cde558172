#include "tnsdim/tables.hpp"

#include <charconv>
#include <sstream>

#include "tables_data.hpp"

namespace tnsdim {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::string join_n(const std::vector<std::int64_t>& n) {
  std::string s;
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? " " : "") + std::to_string(n[i]);
  return s;
}

std::int64_t to_int(const std::string& s, const std::string& line) {
  std::int64_t x = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || end != s.data() + s.size()) throw ParseError("bad integer '" + s + "' in: " + line);
  return x;
}

}  // namespace

std::vector<RefRow> parse_table_csv(const std::string& text) {
  std::vector<RefRow> rows;
  std::istringstream is(text);
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != 5) throw ParseError("table row needs 5 cells: " + line);
    RefRow r;
    for (const auto& x : split(cells[0], ' ')) r.n.push_back(to_int(x, line));
    r.lower = to_int(cells[1], line);
    r.upper = to_int(cells[2], line);
    r.starred = cells[3] == "1";
    r.source = cells[4];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<RefRow> ref_table(const std::string& which) {
  if (which == "c3") return parse_table_csv(embedded::kTableC3);
  if (which == "c4") return parse_table_csv(embedded::kTableC4);
  throw Error("unknown table '" + which + "' (expected c3 or c4)");
}

std::string table_csv_header() {
  return "n,lower,upper,starred,ref_lower,ref_upper,ref_starred,lower_match,upper_match,starred_match,"
         "source,flag\n";
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << table_csv_header();
  for (const auto& r : rows) {
    std::string flag;
    if (!r.lower_match) flag += "lower mismatch vs " + r.ref.source + ";";
    if (!r.upper_match) flag += "upper mismatch vs " + r.ref.source + ";";
    if (!r.starred_match) flag += "star mismatch vs " + r.ref.source + ";";
    if (!flag.empty()) flag.pop_back();
    os << join_n(r.n) << "," << r.lower << "," << r.upper << "," << (r.starred ? 1 : 0) << "," << r.ref.lower
       << "," << r.ref.upper << "," << (r.ref.starred ? 1 : 0) << "," << (r.lower_match ? 1 : 0) << ","
       << (r.upper_match ? 1 : 0) << "," << (r.starred_match ? 1 : 0) << "," << r.ref.source << "," << flag
       << "\n";
  }
  return os.str();
}

}  // namespace tnsdim
