#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pauli/parallel.hpp"
#include "pauli/pauli_sum.hpp"
#include "pauli/pauli_sum_soa.hpp"

namespace pauli {

using Group = std::vector<std::uint32_t>;

/// Ordered groups of term indices; members of a group commute pairwise.
struct CommutationPartition {
  std::vector<Group> groups;
  std::size_t source_size = 0;

  bool operator==(const CommutationPartition&) const = default;
};

struct GroupingStats {
  std::uint64_t commutation_checks = 0;
};

struct PartitionReport {
  bool valid = true;
  std::string message;
  // Set when two members of one group anti-commute.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> violating_pair;
};

/// One group per line, indices separated by single spaces.
void write_partition(std::ostream& os, const CommutationPartition& p);
CommutationPartition read_partition(std::istream& is, std::size_t source_size);

namespace detail {

// A group's member strings stored contiguously next to their indices.
template <std::size_t W>
struct GroupBuffer {
  Group indices;
  std::vector<PauliString<W>> members;
};

template <std::size_t W>
inline std::uint64_t anticommute_word(const PauliString<W>& a, const PauliString<W>& b) {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < W; ++w) {
    acc ^= (a.x_words()[w] & b.z_words()[w]) ^ (a.z_words()[w] & b.x_words()[w]);
  }
  return acc;
}

// True if `p` commutes with every member. Four members are checked per pass
// with independent accumulators.
template <std::size_t W>
bool commutes_with_all(const PauliString<W>& p, std::span<const PauliString<W>> members,
                       std::uint64_t& checks) {
  std::size_t i = 0;
  const std::size_t m = members.size();
  for (; i + 4 <= m; i += 4) {
    const std::uint64_t a0 = anticommute_word(p, members[i]);
    const std::uint64_t a1 = anticommute_word(p, members[i + 1]);
    const std::uint64_t a2 = anticommute_word(p, members[i + 2]);
    const std::uint64_t a3 = anticommute_word(p, members[i + 3]);
    checks += 4;
    if ((std::popcount(a0) | std::popcount(a1) | std::popcount(a2) | std::popcount(a3)) & 1) {
      return false;
    }
  }
  for (; i < m; ++i) {
    ++checks;
    if (std::popcount(anticommute_word(p, members[i])) & 1) return false;
  }
  return true;
}

// First-fit greedy over strings[first, last); indices are absolute.
template <std::size_t W>
std::vector<GroupBuffer<W>> greedy_range(std::span<const PauliString<W>> strings, std::size_t first,
                                         std::size_t last, std::uint64_t& checks) {
  std::vector<GroupBuffer<W>> groups;
  for (std::size_t t = first; t < last; ++t) {
    const PauliString<W>& p = strings[t];
    bool placed = false;
    for (auto& g : groups) {
      if (commutes_with_all<W>(p, g.members, checks)) {
        g.indices.push_back(static_cast<std::uint32_t>(t));
        g.members.push_back(p);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({{static_cast<std::uint32_t>(t)}, {p}});
  }
  return groups;
}

template <std::size_t W>
CommutationPartition to_partition(std::vector<GroupBuffer<W>>&& groups, std::size_t m) {
  CommutationPartition out;
  out.source_size = m;
  out.groups.reserve(groups.size());
  for (auto& g : groups) out.groups.push_back(std::move(g.indices));
  return out;
}

template <std::size_t W>
std::vector<PauliString<W>> gather_strings(const PauliSum<W>& s) {
  std::vector<PauliString<W>> out;
  out.reserve(s.size());
  for (const auto& t : s) out.push_back(t.string);
  return out;
}

template <std::size_t W>
std::vector<PauliString<W>> gather_strings(const PauliSumSoA<W>& s) {
  std::vector<PauliString<W>> out;
  out.reserve(s.size());
  for (std::size_t t = 0; t < s.size(); ++t) out.push_back(s.string_at(t));
  return out;
}

}  // namespace detail

/// Sequential first-fit grouping: each term, in index order, joins the first
/// group whose every member it commutes with, or opens a new group.
template <std::size_t W>
CommutationPartition group_greedy(std::span<const PauliString<W>> strings,
                                  GroupingStats* stats = nullptr) {
  std::uint64_t checks = 0;
  auto groups = detail::greedy_range<W>(strings, 0, strings.size(), checks);
  if (stats) stats->commutation_checks = checks;
  return detail::to_partition(std::move(groups), strings.size());
}

/// Two-phase grouping. Phase 1 runs group_greedy on `chunks` contiguous index
/// ranges in parallel. Phase 2 visits local groups in chunk order and appends
/// each to the first global group it fully commutes with, else opens a new
/// one. chunks == 1 reproduces group_greedy exactly.
template <std::size_t W>
CommutationPartition group_greedy_parallel(std::span<const PauliString<W>> strings,
                                           std::size_t chunks, GroupingStats* stats = nullptr) {
  if (chunks == 0) throw ValueError("chunk count must be at least 1");
  const std::size_t m = strings.size();
  std::vector<std::vector<detail::GroupBuffer<W>>> local(chunks);
  std::vector<std::uint64_t> local_checks(chunks, 0);
  const std::ptrdiff_t nchunks = static_cast<std::ptrdiff_t>(chunks);
#pragma omp parallel for schedule(static, 1) num_threads(static_cast<int>(chunks))
  for (std::ptrdiff_t c = 0; c < nchunks; ++c) {
    const std::size_t first = m * static_cast<std::size_t>(c) / chunks;
    const std::size_t last = m * static_cast<std::size_t>(c + 1) / chunks;
    local[c] = detail::greedy_range<W>(strings, first, last, local_checks[c]);
  }

  std::uint64_t checks = 0;
  for (auto n : local_checks) checks += n;
  std::vector<detail::GroupBuffer<W>> global;
  for (auto& chunk : local) {
    for (auto& lg : chunk) {
      detail::GroupBuffer<W>* target = nullptr;
      for (auto& gg : global) {
        bool ok = true;
        for (const auto& p : lg.members) {
          if (!detail::commutes_with_all<W>(p, gg.members, checks)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          target = &gg;
          break;
        }
      }
      if (target) {
        target->indices.insert(target->indices.end(), lg.indices.begin(), lg.indices.end());
        target->members.insert(target->members.end(), lg.members.begin(), lg.members.end());
      } else {
        global.push_back(std::move(lg));
      }
    }
  }
  if (stats) stats->commutation_checks = checks;
  return detail::to_partition(std::move(global), m);
}

template <std::size_t W>
CommutationPartition group_greedy(const PauliSum<W>& s, GroupingStats* stats = nullptr) {
  const auto strings = detail::gather_strings(s);
  return group_greedy<W>(std::span<const PauliString<W>>(strings), stats);
}

template <std::size_t W>
CommutationPartition group_greedy(const PauliSumSoA<W>& s, GroupingStats* stats = nullptr) {
  const auto strings = detail::gather_strings(s);
  return group_greedy<W>(std::span<const PauliString<W>>(strings), stats);
}

template <std::size_t W>
CommutationPartition group_greedy_parallel(const PauliSum<W>& s, std::size_t chunks,
                                           GroupingStats* stats = nullptr) {
  const auto strings = detail::gather_strings(s);
  return group_greedy_parallel<W>(std::span<const PauliString<W>>(strings), chunks, stats);
}

template <std::size_t W>
CommutationPartition group_greedy_parallel(const PauliSumSoA<W>& s, std::size_t chunks,
                                           GroupingStats* stats = nullptr) {
  const auto strings = detail::gather_strings(s);
  return group_greedy_parallel<W>(std::span<const PauliString<W>>(strings), chunks, stats);
}

/// Checks disjointness, completeness and pairwise commutation inside every
/// group. Reports the first problem found.
template <std::size_t W>
PartitionReport validate_partition(std::span<const PauliString<W>> strings,
                                   const CommutationPartition& p) {
  PartitionReport r;
  auto fail = [&](std::string msg) {
    r.valid = false;
    r.message = std::move(msg);
    return r;
  };
  const std::size_t m = strings.size();
  if (p.source_size != m) {
    return fail("partition covers " + std::to_string(p.source_size) + " terms, sum has " +
                std::to_string(m));
  }
  std::vector<bool> seen(m, false);
  for (std::size_t g = 0; g < p.groups.size(); ++g) {
    if (p.groups[g].empty()) return fail("group " + std::to_string(g) + " is empty");
    for (std::uint32_t idx : p.groups[g]) {
      if (idx >= m) return fail("index " + std::to_string(idx) + " out of range");
      if (seen[idx]) return fail("index " + std::to_string(idx) + " appears twice");
      seen[idx] = true;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!seen[i]) return fail("index " + std::to_string(i) + " missing");
  }
  for (std::size_t g = 0; g < p.groups.size(); ++g) {
    const Group& grp = p.groups[g];
    for (std::size_t i = 0; i < grp.size(); ++i) {
      for (std::size_t j = i + 1; j < grp.size(); ++j) {
        if (symplectic_inner_product(strings[grp[i]], strings[grp[j]]) != 0) {
          r.violating_pair = std::pair{grp[i], grp[j]};
          return fail("terms " + std::to_string(grp[i]) + " and " + std::to_string(grp[j]) +
                      " in group " + std::to_string(g) + " anti-commute");
        }
      }
    }
  }
  return r;
}

template <std::size_t W>
PartitionReport validate_partition(const PauliSum<W>& s, const CommutationPartition& p) {
  const auto strings = detail::gather_strings(s);
  return validate_partition<W>(std::span<const PauliString<W>>(strings), p);
}

template <std::size_t W>
PartitionReport validate_partition(const PauliSumSoA<W>& s, const CommutationPartition& p) {
  const auto strings = detail::gather_strings(s);
  return validate_partition<W>(std::span<const PauliString<W>>(strings), p);
}

}  // namespace pauli
