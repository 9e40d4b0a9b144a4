// Copyright 2026 The qzeno Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Locale-independent CSV output: '.' decimal point, 17 significant digits,
// LF line endings, no trailing separator.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "qzeno/scenario.hpp"

namespace qz::cli {

inline std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

/// "10" for small systems, "1_0" once any index needs two digits.
inline std::string pair_label(Index j, Index k, Index dim) {
  if (dim <= 10) return std::to_string(j) + std::to_string(k);
  return std::to_string(j) + "_" + std::to_string(k);
}

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os_ << ',';
      os_ << cells[i];
    }
    os_ << '\n';
  }

 private:
  std::ostream& os_;
};

inline std::vector<std::string> trajectory_header(const ObservableRecord& first, Index dim) {
  std::vector<std::string> h{"t"};
  for (Index j : first.population_index) h.push_back("rho_" + pair_label(j, j, dim));
  h.emplace_back("sigma");
  for (const auto& c : first.coherences) {
    h.push_back("re_" + pair_label(c.j, c.k, dim));
    h.push_back("im_" + pair_label(c.j, c.k, dim));
  }
  for (const char* s : {"trace", "purity", "energy", "event"}) h.emplace_back(s);
  return h;
}

inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj, Index dim) {
  CsvWriter w(os);
  if (traj.records.empty()) return;
  w.row(trajectory_header(traj.records.front(), dim));
  for (const auto& r : traj.records) {
    std::vector<std::string> cells{format_number(r.t)};
    for (double p : r.populations) cells.push_back(format_number(p));
    cells.push_back(format_number(r.sigma));
    for (const auto& c : r.coherences) {
      cells.push_back(format_number(c.value.real()));
      cells.push_back(format_number(c.value.imag()));
    }
    cells.push_back(format_number(r.trace));
    cells.push_back(format_number(r.purity));
    cells.push_back(format_number(r.energy));
    cells.emplace_back(to_string(r.event));
    w.row(cells);
  }
}

/// Creates missing parent directories.
inline void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    return -1;
  }
};

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

inline CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) return t;
  t.header = split_csv_line(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    t.rows.push_back(split_csv_line(line));
  }
  return t;
}

inline double parse_number(const std::string& s) {
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw ValidationError("not a number: '" + s + "'");
  return x;
}

}  // namespace qz::cli
