// Command-line front end: benchmarks, commutation grouping and Hamiltonian
// multiplication on text files.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "pauli/bench.hpp"
#include "pauli/grouping.hpp"
#include "pauli/hamiltonian_io.hpp"
#include "pauli/tiers.hpp"

namespace {

using namespace pauli;

void print_records(const std::vector<bench::BenchRecord>& records) {
  for (const auto& r : records) {
    std::printf("%-9s %-12s n=%-5zu size=%-8zu %-28s %14.6g %s\n", r.category.c_str(),
                r.variant.c_str(), r.n, r.size, r.metric.c_str(), r.value, r.units.c_str());
  }
}

// Per-variant shape summaries for the timing categories.
void print_summary(const bench::BenchConfig& cfg, const std::vector<bench::BenchRecord>& records) {
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  const std::string metric = cfg.category == bench::Category::PairMul   ? "time_per_op"
                             : cfg.category == bench::Category::SumMul  ? "outer_product"
                             : cfg.category == bench::Category::Grouping ? "time"
                                                                         : "";
  if (metric.empty()) return;
  for (const auto& r : records) {
    if (r.metric == metric) series[r.variant].push_back({static_cast<double>(r.size), r.value});
  }
  for (const auto& [variant, pts] : series) {
    if (pts.size() < 2) continue;
    if (cfg.category == bench::Category::PairMul) {
      const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                                [](auto& a, auto& b) { return a.second < b.second; });
      std::printf("%s: per-op time max/min across sizes = %.3f\n", variant.c_str(),
                  hi->second / lo->second);
    } else {
      std::vector<double> x, y;
      for (const auto& [s, v] : pts) {
        x.push_back(s);
        y.push_back(v);
      }
      std::printf("%s: log-log slope of %s vs terms = %.3f\n", variant.c_str(), metric.c_str(),
                  bench::loglog_slope(x, y));
    }
  }
}

int run_report(const std::vector<std::string>& files) {
  // (category, n, size, metric) -> variant label -> value
  std::map<std::tuple<std::string, std::size_t, std::size_t, std::string>,
           std::vector<std::pair<std::string, bench::BenchRecord>>>
      rows;
  for (const auto& f : files) {
    for (auto& r : bench::read_csv_file(f)) {
      rows[{r.category, r.n, r.size, r.metric}].push_back({f + ":" + r.variant, r});
    }
  }
  for (const auto& [key, entries] : rows) {
    const auto& [category, n, size, metric] = key;
    std::printf("%s n=%zu size=%zu %s\n", category.c_str(), n, size, metric.c_str());
    const double base = entries.front().second.value;
    for (const auto& [label, r] : entries) {
      std::printf("    %-40s %14.6g %-10s x%.3g\n", label.c_str(), r.value, r.units.c_str(),
                  base != 0.0 ? r.value / base : 0.0);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bit-packed Pauli algebra: benchmarks, grouping and Hamiltonian products"};
  app.require_subcommand(1);

  bench::BenchConfig cfg;
  std::string category;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark category and write CSV records");
  bench_cmd->add_option("category", category, "pair-mul, sum-mul, grouping or memory")->required();
  bench_cmd->add_option("--qubits", cfg.num_qubits, "Qubit count")->capture_default_str();
  bench_cmd->add_option("--sizes", cfg.sizes, "Comma-separated pair/term counts")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--seed", cfg.seed, "Instance seed")->capture_default_str();
  bench_cmd->add_option("--repeats", cfg.repeats, "Timed runs (minimum is reported)")->capture_default_str();
  bench_cmd->add_option("--warmups", cfg.warmups, "Discarded runs before timing")->capture_default_str();
  bench_cmd->add_option("--threads", cfg.threads, "Worker threads / grouping chunks (0 = all)")
      ->capture_default_str();
  bench_cmd->add_option("--eps", cfg.eps, "Combine threshold")->capture_default_str();
  bench_cmd->add_option("--out", cfg.output_path, "CSV output file");

  std::string group_in, group_out;
  std::size_t chunks = 0;
  auto* group_cmd = app.add_subcommand("group", "Partition a Hamiltonian into commuting groups");
  group_cmd->add_option("--in", group_in, "Hamiltonian text file")->required();
  group_cmd->add_option("--parallel", chunks, "Chunk count for the two-phase variant (0 = sequential)")
      ->capture_default_str();
  group_cmd->add_option("--out", group_out, "Partition output (default: stdout)");

  std::string mul_a, mul_b, mul_out;
  int mul_threads = 0;
  double mul_eps = 0.0;
  auto* mul_cmd = app.add_subcommand("mul", "Multiply two Hamiltonians");
  mul_cmd->add_option("--a", mul_a, "Left factor")->required();
  mul_cmd->add_option("--b", mul_b, "Right factor")->required();
  mul_cmd->add_option("--out", mul_out, "Product file")->required();
  mul_cmd->add_option("--threads", mul_threads, "Worker threads (0 = all)")->capture_default_str();
  mul_cmd->add_option("--eps", mul_eps, "Combine threshold")->capture_default_str();

  std::vector<std::string> report_files;
  auto* report_cmd = app.add_subcommand("report", "Side-by-side view of benchmark CSVs");
  report_cmd->add_option("files", report_files, "CSV files in the benchmark schema")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bench_cmd) {
      cfg.category = bench::parse_category(category);
      const auto records = bench::run_bench(cfg);
      print_records(records);
      print_summary(cfg, records);
    } else if (*group_cmd) {
      const RawHamiltonian raw = read_hamiltonian_file(group_in);
      CommutationPartition partition;
      if (raw.num_qubits == 0) {
        partition.source_size = 0;
      } else {
        partition = dispatch_tier(raw.num_qubits, [&]<std::size_t W>() {
          const auto sum = to_sum<W>(raw);
          auto p = chunks == 0 ? group_greedy(sum) : group_greedy_parallel(sum, chunks);
          if (const auto report = validate_partition(sum, p); !report.valid) {
            throw std::logic_error("invalid partition: " + report.message);
          }
          return p;
        });
      }
      if (group_out.empty()) {
        write_partition(std::cout, partition);
      } else {
        std::ofstream out(group_out);
        if (!out) throw std::runtime_error("cannot write " + group_out);
        write_partition(out, partition);
        std::cerr << partition.groups.size() << " groups from " << partition.source_size << " terms\n";
      }
    } else if (*mul_cmd) {
      const RawHamiltonian a = read_hamiltonian_file(mul_a);
      const RawHamiltonian b = read_hamiltonian_file(mul_b);
      if (a.num_qubits != b.num_qubits) {
        throw DimensionError("qubit count mismatch: " + std::to_string(a.num_qubits) + " vs " +
                             std::to_string(b.num_qubits));
      }
      dispatch_tier(a.num_qubits, [&]<std::size_t W>() {
        const auto product = multiply(to_sum<W>(a), to_sum<W>(b), mul_threads, mul_eps);
        write_hamiltonian(mul_out, product);
        std::cerr << product.size() << " terms written to " << mul_out << "\n";
      });
    } else if (*report_cmd) {
      return run_report(report_files);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
