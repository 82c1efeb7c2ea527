#include "pauli/bench.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "pauli/grouping.hpp"
#include "pauli/hamiltonian_io.hpp"
#include "pauli/pauli_sum.hpp"
#include "pauli/pauli_sum_soa.hpp"
#include "pauli/random.hpp"
#include "pauli/tiers.hpp"

namespace pauli::bench {
namespace {

// Keeps benchmarked results observable.
volatile std::uint64_t g_sink = 0;

// Operations per timed batch; small workloads are repeated inside a batch so
// that timer resolution does not dominate.
constexpr double kPairOpsPerBatch = 2e5;
constexpr double kProductsPerBatch = 4e4;

std::size_t batch_count(double target, std::size_t ops) {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(target / static_cast<double>(ops))));
}

struct Recorder {
  const BenchConfig& cfg;
  std::vector<BenchRecord>& out;

  void add(std::string_view variant, std::size_t size, std::string_view metric, double value,
           std::string_view units) const {
    out.push_back({std::string(to_string(cfg.category)), std::string(variant), cfg.num_qubits, size,
                   std::string(metric), value, std::string(units), cfg.seed});
  }
};

template <std::size_t W>
void run_pair_mul(const BenchConfig& cfg, const Recorder& rec) {
  for (std::size_t pairs : cfg.sizes) {
    InstanceRng rng(cfg.seed);
    const auto a = random_sum<W>(cfg.num_qubits, pairs, rng);
    const auto b = random_sum<W>(cfg.num_qubits, pairs, rng);
    const auto sa = to_soa(a), sb = to_soa(b);
    const std::size_t batch = batch_count(kPairOpsPerBatch, pairs);
    const double ops = static_cast<double>(batch * pairs);

    const double t_aos = min_seconds(cfg.repeats, cfg.warmups, [&] {
      for (std::size_t r = 0; r < batch; ++r) g_sink = g_sink + pair_multiply(a, b)[0].string.flags();
    });
    rec.add("aos", pairs, "time_per_op", t_aos * 1e9 / ops, "ns/op");

    const double t_soa = min_seconds(cfg.repeats, cfg.warmups, [&] {
      for (std::size_t r = 0; r < batch; ++r) g_sink = g_sink + pair_multiply(sa, sb).flags()[0];
    });
    rec.add("soa", pairs, "time_per_op", t_soa * 1e9 / ops, "ns/op");
  }
}

template <std::size_t W>
void run_sum_mul(const BenchConfig& cfg, const Recorder& rec) {
  const int threads = resolve_threads(cfg.threads);
  for (std::size_t terms : cfg.sizes) {
    InstanceRng rng(cfg.seed);
    const auto a = random_sum<W>(cfg.num_qubits, terms, rng);
    const auto b = random_sum<W>(cfg.num_qubits, terms, rng);
    const auto sa = to_soa(a), sb = to_soa(b);
    const std::size_t batch = batch_count(kProductsPerBatch, terms * terms);

    const double t_aos = min_seconds(cfg.repeats, cfg.warmups, [&] {
      for (std::size_t r = 0; r < batch; ++r) {
        g_sink = g_sink + outer_product(a, b, threads)[0].string.flags();
      }
    });
    rec.add("aos", terms, "outer_product", t_aos * 1e3 / batch, "ms");

    const double t_soa = min_seconds(cfg.repeats, cfg.warmups, [&] {
      for (std::size_t r = 0; r < batch; ++r) {
        g_sink = g_sink + outer_product(sa, sb, threads).flags()[0];
      }
    });
    rec.add("soa", terms, "outer_product", t_soa * 1e3 / batch, "ms");

    std::size_t canonical_terms = 0;
    const double t_full = min_seconds(cfg.repeats, cfg.warmups, [&] {
      canonical_terms = multiply(a, b, threads, cfg.eps).size();
    });
    rec.add("aos", terms, "multiply_combined", t_full * 1e3, "ms");
    rec.add("aos", terms, "output_terms", static_cast<double>(canonical_terms), "count");
  }
}

template <std::size_t W>
void run_grouping(const BenchConfig& cfg, const Recorder& rec) {
  const int chunks = resolve_threads(cfg.threads);
  for (std::size_t terms : cfg.sizes) {
    const auto sum = to_soa(random_sum<W>(cfg.num_qubits, terms, cfg.seed));
    CommutationPartition seq, par;
    GroupingStats seq_stats, par_stats;
    const double t_seq = min_seconds(cfg.repeats, cfg.warmups, [&] { seq = group_greedy(sum, &seq_stats); });
    const double t_par = min_seconds(cfg.repeats, cfg.warmups, [&] {
      par = group_greedy_parallel(sum, static_cast<std::size_t>(chunks), &par_stats);
    });
    rec.add("sequential", terms, "time", t_seq * 1e3, "ms");
    rec.add("sequential", terms, "groups", static_cast<double>(seq.groups.size()), "count");
    rec.add("sequential", terms, "commutation_checks", static_cast<double>(seq_stats.commutation_checks),
            "count");
    const std::string variant = "parallel-T" + std::to_string(chunks);
    rec.add(variant, terms, "time", t_par * 1e3, "ms");
    rec.add(variant, terms, "groups", static_cast<double>(par.groups.size()), "count");
    rec.add(variant, terms, "commutation_checks", static_cast<double>(par_stats.commutation_checks),
            "count");
    if (seq.groups.size() != par.groups.size()) {
      std::cerr << "note: " << terms << " terms: sequential grouping gives " << seq.groups.size()
                << " groups, " << variant << " gives " << par.groups.size() << "\n";
    }
  }
}

std::size_t live_heap_bytes() {
#if defined(__GLIBC__) && (__GLIBC__ > 2 || (__GLIBC__ == 2 && __GLIBC_MINOR__ >= 33))
  return mallinfo2().uordblks;
#else
  return 0;
#endif
}

template <std::size_t W>
void run_memory(const BenchConfig& cfg, const Recorder& rec) {
  for (std::size_t terms : cfg.sizes) {
    const auto source = random_sum<W>(cfg.num_qubits, terms, cfg.seed);
    const double m = static_cast<double>(terms);

    {
      const std::size_t before = live_heap_bytes();
      const PauliSum<W> copy = source;
      const std::size_t after = live_heap_bytes();
      const double payload = static_cast<double>(copy.capacity() * sizeof(PauliTerm<W>));
      rec.add("aos", terms, "theoretical_bytes_per_term",
              static_cast<double>(theoretical_bytes_per_term(W)), "bytes/term");
      rec.add("aos", terms, "payload_bytes_per_term", payload / m, "bytes/term");
      rec.add("aos", terms, "payload_bytes", payload, "bytes");
      if (after > before) {
        rec.add("aos", terms, "allocator_bytes_per_term", static_cast<double>(after - before) / m,
                "bytes/term");
      }
    }
    {
      const std::size_t before = live_heap_bytes();
      const PauliSumSoA<W> soa = to_soa(source);
      const std::size_t after = live_heap_bytes();
      const double payload = static_cast<double>(soa.payload_bytes());
      rec.add("soa", terms, "theoretical_bytes_per_term",
              static_cast<double>(theoretical_bytes_per_term(soa.word_count())), "bytes/term");
      rec.add("soa", terms, "payload_bytes_per_term", payload / m, "bytes/term");
      rec.add("soa", terms, "payload_bytes", payload, "bytes");
      if (after > before) {
        rec.add("soa", terms, "allocator_bytes_per_term", static_cast<double>(after - before) / m,
                "bytes/term");
      }
    }
  }
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <class T>
T parse_number(const std::string& s, std::size_t lineno) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(lineno) + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

std::string_view to_string(Category c) {
  switch (c) {
    case Category::PairMul: return "pair-mul";
    case Category::SumMul: return "sum-mul";
    case Category::Grouping: return "grouping";
    case Category::Memory: return "memory";
  }
  return "?";
}

Category parse_category(std::string_view s) {
  for (Category c : {Category::PairMul, Category::SumMul, Category::Grouping, Category::Memory}) {
    if (s == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown benchmark category '" + std::string(s) + "'");
}

void validate(const BenchConfig& cfg) {
  if (cfg.sizes.empty()) throw std::invalid_argument("at least one size is required");
  for (std::size_t s : cfg.sizes) {
    if (s == 0) throw std::invalid_argument("sizes must be positive");
  }
  if (cfg.repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  if (cfg.warmups < 0) throw std::invalid_argument("warmups must be non-negative");
  if (cfg.threads < 0) throw std::invalid_argument("threads must be non-negative");
  if (!(cfg.eps >= 0.0)) throw std::invalid_argument("eps must be non-negative");
  tier_for(cfg.num_qubits);
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  validate(cfg);
  // Open the output first so an unwritable path fails before any timing.
  std::ofstream csv;
  if (!cfg.output_path.empty()) {
    csv.open(cfg.output_path);
    if (!csv) throw std::runtime_error("cannot write " + cfg.output_path);
  }
  std::vector<BenchRecord> records;
  const Recorder rec{cfg, records};
  dispatch_tier(cfg.num_qubits, [&]<std::size_t W>() {
    switch (cfg.category) {
      case Category::PairMul: run_pair_mul<W>(cfg, rec); break;
      case Category::SumMul: run_sum_mul<W>(cfg, rec); break;
      case Category::Grouping: run_grouping<W>(cfg, rec); break;
      case Category::Memory: run_memory<W>(cfg, rec); break;
    }
  });
  if (csv.is_open()) {
    write_csv(csv, records);
    if (!csv) throw std::runtime_error("write failed for " + cfg.output_path);
  }
  return records;
}

void write_csv(std::ostream& os, std::span<const BenchRecord> records) {
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << r.category << ',' << r.variant << ',' << r.n << ',' << r.size << ',' << r.metric << ','
       << format_coefficient(r.value) << ',' << r.units << ',' << r.seed << '\n';
  }
}

void write_csv_file(const std::string& path, std::span<const BenchRecord> records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_csv(out, records);
}

std::vector<BenchRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) {
    throw ParseError("line 1: expected header '" + std::string(kCsvHeader) + "'");
  }
  std::vector<BenchRecord> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_commas(line);
    if (f.size() != 8) throw ParseError("line " + std::to_string(lineno) + ": expected 8 fields");
    out.push_back({f[0], f[1], parse_number<std::size_t>(f[2], lineno),
                   parse_number<std::size_t>(f[3], lineno), f[4], parse_number<double>(f[5], lineno),
                   f[6], parse_number<std::uint64_t>(f[7], lineno)});
  }
  return out;
}

std::vector<BenchRecord> read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_csv(in);
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need two or more points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace pauli::bench
