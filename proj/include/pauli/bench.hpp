#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pauli::bench {

enum class Category { PairMul, SumMul, Grouping, Memory };

std::string_view to_string(Category c);
Category parse_category(std::string_view s);

struct BenchConfig {
  Category category = Category::PairMul;
  std::size_t num_qubits = 500;
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 1;
  int repeats = 5;
  int warmups = 3;
  int threads = 0;  // 0: OpenMP default
  double eps = 0.0;
  std::string output_path;  // empty: no CSV file
};

/// Throws std::invalid_argument (or CapacityError) for an unusable config.
void validate(const BenchConfig& cfg);

struct BenchRecord {
  std::string category;
  std::string variant;
  std::size_t n = 0;
  std::size_t size = 0;
  std::string metric;
  double value = 0.0;
  std::string units;  // ns/op, ms, bytes, bytes/term or count
  std::uint64_t seed = 0;

  bool operator==(const BenchRecord&) const = default;
};

/// Runs every size in the config and writes the CSV when an output path is
/// set. Timings are the minimum over `repeats` runs after `warmups` runs.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

inline constexpr std::string_view kCsvHeader = "category,variant,n,size,metric,value,units,seed";

void write_csv(std::ostream& os, std::span<const BenchRecord> records);
void write_csv_file(const std::string& path, std::span<const BenchRecord> records);
std::vector<BenchRecord> read_csv(std::istream& is);
std::vector<BenchRecord> read_csv_file(const std::string& path);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// Bytes per AoS/SoA term under real-coefficient accounting: X and Z words,
/// an 8-byte coefficient and a one-byte flags field.
constexpr std::size_t theoretical_bytes_per_term(std::size_t words) { return words * 16 + 8 + 1; }

/// Minimum wall time in seconds of `fn` over `repeats` runs after `warmups`
/// discarded runs.
template <class Fn>
double min_seconds(int repeats, int warmups, Fn&& fn) {
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < warmups; ++i) fn();
  double best = 0.0;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = clock::now();
    fn();
    const double dt = std::chrono::duration<double>(clock::now() - t0).count();
    if (i == 0 || dt < best) best = dt;
  }
  return best;
}

}  // namespace pauli::bench
