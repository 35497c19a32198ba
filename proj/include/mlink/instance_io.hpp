#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mlink/cost_oracle.hpp"
#include "mlink/generators.hpp"

namespace mlink {

// Explicit instance format: first line N, then N-1 lines; line i holds
// c(i, i+1) ... c(i, N) separated by whitespace. Blank lines and lines
// starting with '#' are skipped.
template <class T>
CostOracle<T> read_instance(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  require(!lines.empty(), "instance: empty input");
  Index n = 0;
  {
    std::istringstream head(lines[0]);
    std::string extra;
    require(static_cast<bool>(head >> n) && !(head >> extra), "instance: first line must be N");
  }
  require(n >= 2, "instance: N must be >= 2");
  require(static_cast<Index>(lines.size()) == n, "instance: expected N-1 cost lines after N");
  std::vector<std::vector<T>> rows(static_cast<std::size_t>(n - 1));
  for (Index i = 1; i < n; ++i) {
    std::istringstream row(lines[static_cast<std::size_t>(i)]);
    auto& out = rows[static_cast<std::size_t>(i - 1)];
    for (T v; row >> v;) out.push_back(v);
    require(row.eof(), "instance: malformed number");
    require(static_cast<Index>(out.size()) == n - i, "instance: line i must hold N-i costs");
  }
  return explicit_oracle<T>(n, std::move(rows));
}

template <class T>
void write_instance(std::ostream& out, const CostOracle<T>& o) {
  const Index n = o.size();
  out << n << '\n';
  for (Index i = 1; i < n; ++i) {
    for (Index j = i + 1; j <= n; ++j) out << (j > i + 1 ? " " : "") << o.peek(i, j);
    out << '\n';
  }
}

// One number per line; blank lines and '#' comments are skipped.
inline std::vector<double> read_data(std::istream& in) {
  std::vector<double> data;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream cell(line);
    double x = 0.0;
    std::string extra;
    require(static_cast<bool>(cell >> x) && !(cell >> extra), "data: expected one number per line");
    data.push_back(x);
  }
  return data;
}

}  // namespace mlink
