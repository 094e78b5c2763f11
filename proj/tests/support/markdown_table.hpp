#pragma once

// Reads finding rows back out of a rendered markdown report.

#include <sstream>
#include <string>
#include <vector>

namespace admintm::testing {

struct MarkdownRow {
  std::string attack;
  std::string status;
  std::string reason;
  std::string stride;

  bool operator<(const MarkdownRow& o) const {
    return std::tie(attack, status, reason, stride) < std::tie(o.attack, o.status, o.reason, o.stride);
  }
  bool operator==(const MarkdownRow&) const = default;
};

inline std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string current;
  for (std::size_t i = 1; i < line.size(); ++i) {
    char c = line[i];
    if (c == '\\' && i + 1 < line.size() && line[i + 1] == '|') {
      current += '|';
      ++i;
    } else if (c == '|') {
      auto b = current.find_first_not_of(' ');
      auto e = current.find_last_not_of(' ');
      cells.push_back(b == std::string::npos ? "" : current.substr(b, e - b + 1));
      current.clear();
    } else {
      current += c;
    }
  }
  return cells;
}

// Finding rows of every table whose header starts with "| Attack | Title".
inline std::vector<MarkdownRow> finding_rows(const std::string& markdown) {
  std::vector<MarkdownRow> rows;
  std::istringstream in(markdown);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("| ", 0) != 0 || line.rfind("| Attack |", 0) == 0) continue;
    auto cells = split_cells(line);
    if (cells.size() < 5) continue;
    rows.push_back(MarkdownRow{cells[0], cells[2], cells[3], cells[4]});
  }
  return rows;
}

}  // namespace admintm::testing
