// Acceptance gate. Prints one PASS/FAIL line per criterion, exits nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <omp.h>
#include <random>
#include <string>

#include "dense_oracle.hpp"
#include "pauli/bench.hpp"
#include "pauli/grouping.hpp"
#include "pauli/pauli_sum.hpp"
#include "pauli/random.hpp"
#include "pauli/rotation.hpp"
#include "test_support.hpp"

using namespace pauli;
using testing_support::random_complex_sum;
using testing_support::random_pauli;
using P1 = PauliString<1>;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

int failures = 0;

void criterion(const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) out.fail("runtime " + std::to_string(secs) + " s over limit");
  if (!out.ok) ++failures;
  std::printf("%s  %-28s %.3fs  %s\n", out.ok ? "PASS" : "FAIL", name, secs, out.detail.c_str());
  std::fflush(stdout);
}

constexpr double kTol = 1e-12;

// Single-qubit products as printed: row * column = i^k letter.
struct TableEntry {
  char a, b, result;
  unsigned k;
};
constexpr TableEntry kTable[] = {
    {'I', 'I', 'I', 0}, {'I', 'X', 'X', 0}, {'I', 'Y', 'Y', 0}, {'I', 'Z', 'Z', 0},
    {'X', 'I', 'X', 0}, {'X', 'X', 'I', 0}, {'X', 'Y', 'Z', 1}, {'X', 'Z', 'Y', 3},
    {'Y', 'I', 'Y', 0}, {'Y', 'X', 'Z', 3}, {'Y', 'Y', 'I', 0}, {'Y', 'Z', 'X', 1},
    {'Z', 'I', 'Z', 0}, {'Z', 'X', 'Y', 1}, {'Z', 'Y', 'X', 3}, {'Z', 'Z', 'I', 0},
};

Outcome product_table() {
  Outcome out;
  for (const auto& e : kTable) {
    const auto r = P1::from_label(std::string(1, e.a)) * P1::from_label(std::string(1, e.b));
    if (r.label() != std::string(1, e.result) || r.phase() != Phase(e.k)) {
      out.fail(std::string{e.a, e.b} + " gave i^" + std::to_string(r.phase().exponent()) + r.label());
    }
  }
  out.detail = out.ok ? "16/16 pairs" : out.detail;
  return out;
}

Outcome dense_equivalence() {
  Outcome out;
  std::mt19937_64 rng(20241);
  const int pairs = 10000;
  for (int i = 0; i < pairs && out.ok; ++i) {
    const std::size_t n = 1 + i % 5;
    const auto a = random_pauli<1>(rng, n, true);
    const auto b = random_pauli<1>(rng, n, true);
    const oracle::Matrix ma = oracle::dense(a), mb = oracle::dense(b);
    const oracle::Matrix prod = ma * mb;
    const auto r = a * b;
    if (oracle::dense(r) != prod) out.fail("product mismatch " + a.label() + "*" + b.label());
    const bool dense_commutes = (prod - mb * ma).isZero(0.0);
    if (commutes(a, b) != dense_commutes) out.fail("commutes mismatch " + a.label() + "," + b.label());
    if (symplectic_inner_product(a, b) != (dense_commutes ? 0u : 1u)) {
      out.fail("inner product mismatch " + a.label() + "," + b.label());
    }
  }
  if (out.ok) out.detail = std::to_string(pairs) + " pairs, n in 1..5";
  return out;
}

Outcome worked_example() {
  Outcome out;
  const auto r = P1::from_label("XIZ") * P1::from_label("ZIX");
  if (r.label() != "YIY" || r.phase() != Phase::one()) {
    out.fail("got i^" + std::to_string(r.phase().exponent()) + " " + r.label());
  } else {
    out.detail = "XIZ*ZIX = +YIY";
  }
  return out;
}

Outcome clifford_exhaustive() {
  Outcome out;
  int cases = 0;
  auto check = [&](const P1& q, const CliffordOp& op, std::size_t n) {
    const auto r = apply_clifford(q, op);
    const oracle::Matrix u = oracle::gate_matrix(op, n);
    const oracle::Matrix expected = u * oracle::dense(q) * u.adjoint();
    auto letters = r;
    letters.set_phase(Phase::one());
    // Letters are discrete, so a wrong letter cannot hide under the 1/sqrt(2) rounding slack.
    const auto k = oracle::phase_relation_approx(expected, oracle::dense(letters), kTol);
    if (!k) {
      out.fail(std::string(gate_name(op.gate)) + " " + q.label() + ": letters differ");
    } else if (Phase(*k) != r.phase()) {
      out.fail(std::string(gate_name(op.gate)) + " " + q.label() + ": phase differs");
    }
    ++cases;
  };
  const char letters[] = "IXYZ";
  for (int l = 0; l < 4; ++l) {
    for (unsigned k = 0; k < 4; ++k) {
      for (auto op : {CliffordOp::h(0), CliffordOp::s(0)}) check(P1::from_label(std::string(1, letters[l]), Phase(k)), op, 1);
    }
  }
  for (int a = 0; a < 16; ++a) {
    const std::string label{letters[a / 4], letters[a % 4]};
    for (unsigned k = 0; k < 4; ++k) {
      for (auto op : {CliffordOp::cnot(0, 1), CliffordOp::cnot(1, 0), CliffordOp::cz(0, 1), CliffordOp::cz(1, 0)}) {
        check(P1::from_label(label, Phase(k)), op, 2);
      }
    }
  }
  if (out.ok) out.detail = std::to_string(cases) + " conjugations";
  return out;
}

std::pair<P1, P1> anticommuting_pair(std::mt19937_64& rng) {
  for (;;) {
    const std::size_t n = 1 + rng() % 3;
    auto p = random_pauli<1>(rng, n);
    auto q = random_pauli<1>(rng, n);
    if (!commutes(p, q)) return {p, q};
  }
}

Outcome rotation_cases() {
  Outcome out;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const auto [p, q] = anticommuting_pair(rng);
    PauliSum<1> s(q.num_qubits());
    s.push_back({1.0, q});
    for (int t = 0; t < 20; ++t) {
      const RotationSpec<1> r{p, angle(rng)};
      const auto rotated = apply_rotation(s, r);
      const oracle::Matrix u = oracle::rotation_matrix(p, r.angle);
      const oracle::Matrix expected = u * oracle::dense(q) * u.adjoint();
      worst = std::max(worst, oracle::max_abs_diff(oracle::dense(rotated), expected));
    }
    // theta = pi: -Q exactly
    const auto flipped = apply_rotation(s, RotationSpec<1>{p, std::numbers::pi});
    if (flipped.size() != 1 || flipped[0].coeff != Complex(-1.0, 0.0) || !flipped[0].string.same_letters(q) ||
        flipped[0].string.phase() != Phase::one()) {
      out.fail("theta=pi not -Q for " + p.label() + "," + q.label());
    }
    // theta = pi/2: -iPQ exactly, with the phase of PQ folded into the coefficient
    const auto half = apply_rotation(s, RotationSpec<1>{p, std::numbers::pi / 2});
    const auto pq = p * q;
    const Complex want = times_phase(Complex(0.0, -1.0), pq.phase());
    if (half.size() != 1 || half[0].coeff != want || !half[0].string.same_letters(pq) ||
        half[0].string.phase() != Phase::one()) {
      out.fail("theta=pi/2 not -iPQ for " + p.label() + "," + q.label());
    }
  }
  if (worst > kTol) out.fail("dense diff " + std::to_string(worst));
  if (out.ok) out.detail = "50 pairs x 20 angles, max diff " + std::to_string(worst);
  return out;
}

Outcome reordering_identity() {
  Outcome out;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const auto [p, pp] = anticommuting_pair(rng);
    const RotationSpec<1> rot{pp, angle(rng)};
    const auto moved = reorder_rotation(rot, p);
    // P_{pi/4} is exp(-i pi/4 P), i.e. a half-angle rotation by pi/2
    const oracle::Matrix c = oracle::rotation_matrix(p, std::numbers::pi / 2);
    const oracle::Matrix lhs = oracle::rotation_matrix(pp, rot.angle) * c;
    const oracle::Matrix rhs = c * oracle::rotation_matrix(moved.generator, moved.angle);
    worst = std::max(worst, oracle::max_abs_diff(lhs, rhs));
  }
  if (worst > kTol) out.fail("max diff " + std::to_string(worst));
  else out.detail = "500 pairs, max diff " + std::to_string(worst);
  return out;
}

Outcome combine_properties() {
  Outcome out;
  std::mt19937_64 rng(8);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 4;
    const auto s = random_complex_sum<1>(rng, n, 1 + rng() % 30, true);

    // (i) s + (-s) cancels
    auto both = s;
    for (const auto& t : s) both.push_back({-t.coeff, t.string});
    if (!sort_and_combine(both).empty()) out.fail("(i) negation did not cancel");

    // (ii) three shuffled copies triple each combined coefficient
    auto tripled = s;
    for (int c = 0; c < 2; ++c) {
      for (const auto& t : s) tripled.push_back(t);
    }
    std::vector<PauliTerm<1>> shuffled(tripled.begin(), tripled.end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto once = sort_and_combine(s);
    const auto thrice = sort_and_combine(PauliSum<1>(n, shuffled));
    if (once.size() != thrice.size()) {
      out.fail("(ii) size changed");
    } else {
      for (std::size_t t = 0; t < once.size(); ++t) {
        if (!once[t].string.same_letters(thrice[t].string) || std::abs(thrice[t].coeff - 3.0 * once[t].coeff) > kTol) {
          out.fail("(ii) coefficient not tripled");
        }
      }
    }

    // (iii) idempotent, bit for bit
    if (!(sort_and_combine(once) == once)) out.fail("(iii) not idempotent");

    // (iv) same operator before and after
    worst = std::max(worst, oracle::max_abs_diff(oracle::dense(s), oracle::dense(once)));
  }
  if (worst > kTol) out.fail("(iv) dense diff " + std::to_string(worst));
  if (out.ok) out.detail = "200 sums, (i)-(iv) hold, max diff " + std::to_string(worst);
  return out;
}

Outcome outer_product_properties() {
  Outcome out;
  std::mt19937_64 rng(9);
  double worst = 0;
  const int max_threads = std::max(1, omp_get_max_threads());
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 4;
    const auto a = random_complex_sum<1>(rng, n, 1 + rng() % 10, true);
    const auto b = random_complex_sum<1>(rng, n, 1 + rng() % 10, true);
    const auto raw = outer_product(a, b, 1);
    if (raw.size() != a.size() * b.size()) out.fail("raw size not |a||b|");
    const auto combined = multiply(a, b, 1);
    worst = std::max(worst, oracle::max_abs_diff(oracle::dense(combined), oracle::dense(a) * oracle::dense(b)));
    for (int threads : {4, max_threads}) {
      if (!(multiply(a, b, threads) == combined)) out.fail("thread count changed output");
    }
  }
  // a larger instance so several threads get real blocks
  const auto a = random_sum<8>(500, 200, 11), b = random_sum<8>(500, 150, 12);
  const auto ref = multiply(a, b, 1);
  for (int threads : {4, max_threads}) {
    if (!(multiply(a, b, threads) == ref)) out.fail("thread count changed output at n=500");
  }
  if (worst > kTol) out.fail("dense diff " + std::to_string(worst));
  if (out.ok) {
    out.detail = "200 pairs, threads {1,4," + std::to_string(max_threads) + "}, max diff " + std::to_string(worst);
  }
  return out;
}

Outcome grouping_properties() {
  Outcome out;
  std::mt19937_64 rng(10);
  for (int i = 0; i < 1000 && out.ok; ++i) {
    const std::size_t n = 1 + rng() % 16;
    const std::size_t m = rng() % 150;
    const auto s = random_sum<1>(n, m, rng());
    GroupingStats stats;
    const auto seq = group_greedy(s, &stats);
    const auto report = validate_partition(s, seq);
    if (!report.valid) out.fail("sequential: " + report.message);
    if (stats.commutation_checks > m * m) out.fail("checks exceed M^2");
    for (std::size_t t : {1u, 2u, 4u, 8u}) {
      const auto par = group_greedy_parallel(s, t);
      const auto r = validate_partition(s, par);
      if (!r.valid) out.fail("parallel T=" + std::to_string(t) + ": " + r.message);
      if (t == 1 && !(par == seq)) out.fail("T=1 differs from sequential");
    }
  }
  PauliSum<1> all_z(6);
  for (int i = 0; i < 64; ++i) {
    std::string label(6, 'I');
    for (int q = 0; q < 6; ++q) {
      if (i >> q & 1) label[q] = 'Z';
    }
    all_z.push_back({1.0, P1::from_label(label)});
  }
  if (group_greedy(all_z).groups.size() != 1) out.fail("all-Z instance not one group");
  for (std::size_t t : {2u, 4u, 8u}) {
    if (group_greedy_parallel(all_z, t).groups.size() != 1) out.fail("all-Z instance not one group (parallel)");
  }
  if (out.ok) out.detail = "1000 instances, T in {1,2,4,8}";
  return out;
}

double metric(const std::vector<bench::BenchRecord>& records, std::string_view variant, std::size_t size,
              std::string_view name) {
  for (const auto& r : records) {
    if (r.variant == variant && r.size == size && r.metric == name) return r.value;
  }
  throw std::runtime_error("missing metric " + std::string(name));
}

Outcome memory_arithmetic() {
  Outcome out;
  bench::BenchConfig cfg;
  cfg.category = bench::Category::Memory;
  cfg.num_qubits = 500;
  cfg.sizes = {10000};
  const auto records = bench::run_bench(cfg);
  const double theoretical = metric(records, "aos", 10000, "theoretical_bytes_per_term");
  const double payload = metric(records, "aos", 10000, "payload_bytes_per_term");
  if (theoretical != 137.0) out.fail("theoretical " + std::to_string(theoretical));
  if (payload < theoretical || payload > 2 * theoretical) out.fail("payload " + std::to_string(payload));
  if (out.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "theoretical %.0f B/term, payload %.0f B/term", theoretical, payload);
    out.detail = buf;
  }
  return out;
}

Outcome scaling_shapes() {
  Outcome out;
  bench::BenchConfig pair;
  pair.category = bench::Category::PairMul;
  pair.num_qubits = 500;
  pair.sizes = {100, 1000};
  pair.repeats = 9;
  const auto pr = bench::run_bench(pair);
  std::string detail;
  for (const char* v : {"aos", "soa"}) {
    const double a = metric(pr, v, 100, "time_per_op"), b = metric(pr, v, 1000, "time_per_op");
    const double ratio = std::max(a, b) / std::min(a, b);
    if (!(ratio < 2.0)) out.fail(std::string(v) + " pair-mul ratio " + std::to_string(ratio));
    char buf[64];
    std::snprintf(buf, sizeof buf, "pair %s %.1f/%.1f ns ratio %.2f; ", v, a, b, ratio);
    detail += buf;
  }

  bench::BenchConfig sum;
  sum.category = bench::Category::SumMul;
  sum.num_qubits = 500;
  sum.sizes = {25, 50, 100, 200};
  sum.threads = 1;
  sum.repeats = 5;
  const auto sr = bench::run_bench(sum);
  for (const char* v : {"aos", "soa"}) {
    std::vector<double> x, y;
    for (std::size_t n : sum.sizes) {
      x.push_back(static_cast<double>(n));
      y.push_back(metric(sr, v, n, "outer_product"));
    }
    const double slope = bench::loglog_slope(x, y);
    if (std::abs(slope - 2.0) > 0.3) out.fail(std::string(v) + " sum-mul slope " + std::to_string(slope));
    char buf[48];
    std::snprintf(buf, sizeof buf, "sum %s slope %.2f; ", v, slope);
    detail += buf;
  }
  if (out.ok) out.detail = detail;
  else out.detail += " | " + detail;
  return out;
}

}  // namespace

int main() {
  criterion("product-table", 1.0, product_table);
  criterion("dense-oracle-equivalence", 30.0, dense_equivalence);
  criterion("worked-example", 0, worked_example);
  criterion("clifford-conjugation", 5.0, clifford_exhaustive);
  criterion("rotation-cases", 30.0, rotation_cases);
  criterion("reordering-identity", 0, reordering_identity);
  criterion("sort-and-combine", 0, combine_properties);
  criterion("outer-product", 0, outer_product_properties);
  criterion("grouping", 0, grouping_properties);
  criterion("memory-arithmetic", 0, memory_arithmetic);
  criterion("scaling-shapes", 0, scaling_shapes);
  std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
