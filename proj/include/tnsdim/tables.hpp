#pragma once

// Reproduction of the bond-2 cycle tables (C3 and C4) against the values
// shipped in data/tables, embedded at build time.

#include <cstdint>
#include <string>
#include <vector>

#include "tnsdim/dimension.hpp"

namespace tnsdim {

struct RefRow {
  std::vector<std::int64_t> n;
  std::int64_t lower = 0, upper = 0;
  bool starred = false;
  std::string source;
};

struct TableRow {
  std::vector<std::int64_t> n;
  std::int64_t lower = 0, upper = 0;
  bool starred = false;  ///< lower != upper
  RefRow ref;
  bool lower_match = false, upper_match = false, starred_match = false;
};

/// "c3" or "c4". Throws Error otherwise.
std::vector<RefRow> ref_table(const std::string& which);
std::vector<RefRow> parse_table_csv(const std::string& text);

std::string table_csv_header();
std::string table_to_csv(const std::vector<TableRow>& rows);

/// One dim_report per row of the shipped table, on the cycle with bond 2.
template <class F>
std::vector<TableRow> compute_table(const std::string& which, const F& field, const Rng& rng, int trials = 3) {
  std::vector<TableRow> out;
  for (const auto& p : ref_table(which)) {
    const auto net = make_cycle(std::vector<std::int64_t>(p.n.size(), 2), p.n);
    const auto rep = dim_report(net, field, rng, trials);
    TableRow row{p.n, rep.lower_bound, rep.upper_bound, rep.lower_bound != rep.upper_bound, p};
    row.lower_match = row.lower == p.lower;
    row.upper_match = row.upper == p.upper;
    row.starred_match = row.starred == p.starred;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace tnsdim
