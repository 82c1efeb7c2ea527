#include "pauli/grouping.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace pauli {

void write_partition(std::ostream& os, const CommutationPartition& p) {
  for (const Group& g : p.groups) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) os << ' ';
      os << g[i];
    }
    os << '\n';
  }
}

CommutationPartition read_partition(std::istream& is, std::size_t source_size) {
  CommutationPartition p;
  p.source_size = source_size;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    Group g;
    long long idx = 0;
    while (ls >> idx) {
      if (idx < 0) throw ParseError("line " + std::to_string(lineno) + ": negative index");
      g.push_back(static_cast<std::uint32_t>(idx));
    }
    if (!ls.eof()) throw ParseError("line " + std::to_string(lineno) + ": expected integers");
    p.groups.push_back(std::move(g));
  }
  return p;
}

}  // namespace pauli
