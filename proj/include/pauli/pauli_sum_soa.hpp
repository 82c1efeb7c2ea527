#pragma once

#include <algorithm>
#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "pauli/pauli_sum.hpp"

namespace pauli {

/// Struct-of-arrays Pauli sum. For each word index w < ceil(n/64) there is
/// one contiguous array of M X-words and one of M Z-words; flags and
/// coefficients are separate length-M arrays. Term t here is term t of the
/// equivalent PauliSum.
template <std::size_t W>
class PauliSumSoA {
 public:
  explicit PauliSumSoA(std::size_t n)
      : n_(n), x_(words_for(n)), z_(words_for(n)) {
    if (n > PauliString<W>::kCapacity) {
      throw CapacityError(std::to_string(n) + " qubits exceed tier capacity " +
                          std::to_string(PauliString<W>::kCapacity));
    }
  }

  static PauliSumSoA from_labels(std::span<const LabeledTerm> entries,
                                 std::optional<std::size_t> n = std::nullopt);

  std::size_t num_qubits() const { return n_; }
  std::size_t word_count() const { return x_.size(); }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }

  std::span<const std::uint64_t> x_words(std::size_t w) const { return x_[w]; }
  std::span<const std::uint64_t> z_words(std::size_t w) const { return z_[w]; }
  std::span<std::uint64_t> x_words(std::size_t w) { return x_[w]; }
  std::span<std::uint64_t> z_words(std::size_t w) { return z_[w]; }
  std::span<const std::uint8_t> flags() const { return flags_; }
  std::span<std::uint8_t> flags() { return flags_; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  std::span<Complex> coeffs() { return coeffs_; }

  /// Resizes every array; new terms are identity strings with coefficient 0.
  void resize(std::size_t m) {
    for (auto& v : x_) v.resize(m);
    for (auto& v : z_) v.resize(m);
    flags_.resize(m);
    coeffs_.resize(m);
  }

  void reserve(std::size_t m) {
    for (auto& v : x_) v.reserve(m);
    for (auto& v : z_) v.reserve(m);
    flags_.reserve(m);
    coeffs_.reserve(m);
  }

  PauliString<W> string_at(std::size_t t) const {
    std::array<std::uint64_t, W> xs{}, zs{};
    for (std::size_t w = 0; w < word_count(); ++w) {
      xs[w] = x_[w][t];
      zs[w] = z_[w][t];
    }
    return PauliString<W>::from_words(n_, xs, zs, Phase(flags_[t]));
  }

  PauliTerm<W> term_at(std::size_t t) const { return {coeffs_[t], string_at(t)}; }

  void set_term(std::size_t t, const PauliTerm<W>& term) {
    check_term(term);
    for (std::size_t w = 0; w < word_count(); ++w) {
      x_[w][t] = term.string.x_words()[w];
      z_[w][t] = term.string.z_words()[w];
    }
    flags_[t] = term.string.flags();
    coeffs_[t] = term.coeff;
  }

  void push_back(const PauliTerm<W>& term) {
    check_term(term);
    for (std::size_t w = 0; w < word_count(); ++w) {
      x_[w].push_back(term.string.x_words()[w]);
      z_[w].push_back(term.string.z_words()[w]);
    }
    flags_.push_back(term.string.flags());
    coeffs_.push_back(term.coeff);
  }

  /// Bytes held by the arrays (capacity, not size).
  std::size_t payload_bytes() const {
    std::size_t b = flags_.capacity() * sizeof(std::uint8_t) + coeffs_.capacity() * sizeof(Complex);
    for (const auto& v : x_) b += v.capacity() * sizeof(std::uint64_t);
    for (const auto& v : z_) b += v.capacity() * sizeof(std::uint64_t);
    return b;
  }

  bool operator==(const PauliSumSoA&) const = default;

 private:
  void check_term(const PauliTerm<W>& t) const {
    detail::require_same_size(n_, t.string.num_qubits());
    if (!is_finite(t.coeff)) throw ValueError("non-finite coefficient");
  }

  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> x_;
  std::vector<std::vector<std::uint64_t>> z_;
  std::vector<std::uint8_t> flags_;
  std::vector<Complex> coeffs_;
};

template <std::size_t W>
PauliSumSoA<W> to_soa(const PauliSum<W>& s) {
  PauliSumSoA<W> out(s.num_qubits());
  out.resize(s.size());
  for (std::size_t t = 0; t < s.size(); ++t) out.set_term(t, s[t]);
  return out;
}

template <std::size_t W>
PauliSum<W> to_aos(const PauliSumSoA<W>& s) {
  std::vector<PauliTerm<W>> terms(s.size());
  for (std::size_t t = 0; t < s.size(); ++t) terms[t] = s.term_at(t);
  return PauliSum<W>(s.num_qubits(), std::move(terms));
}

template <std::size_t W>
PauliSumSoA<W> PauliSumSoA<W>::from_labels(std::span<const LabeledTerm> entries,
                                           std::optional<std::size_t> n) {
  return to_soa(PauliSum<W>::from_labels(entries, n));
}

// ---------------------------------------------------------------------------
// Canonicalization

template <std::size_t W>
PauliSumSoA<W> sort_and_combine(const PauliSumSoA<W>& s, double eps = 0.0) {
  detail::check_eps(eps);
  const std::size_t m = s.size(), nw = s.word_count();
  auto compare = [&](std::uint32_t a, std::uint32_t b) {
    for (std::size_t w = 0; w < nw; ++w) {
      const std::uint64_t za = s.z_words(w)[a], zb = s.z_words(w)[b];
      if (za != zb) return za < zb ? -1 : 1;
    }
    for (std::size_t w = 0; w < nw; ++w) {
      const std::uint64_t xa = s.x_words(w)[a], xb = s.x_words(w)[b];
      if (xa != xb) return xa < xb ? -1 : 1;
    }
    return 0;
  };
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const int c = compare(a, b);
    return c != 0 ? c < 0 : a < b;
  });

  const auto flags = s.flags();
  const auto coeffs = s.coeffs();
  PauliSumSoA<W> out(s.num_qubits());
  out.reserve(m);
  for (std::size_t i = 0; i < m;) {
    const std::uint32_t head = order[i];
    detail::CompensatedSum sum(times_phase(coeffs[head], Phase(flags[head])));
    std::size_t j = i + 1;
    for (; j < m && compare(head, order[j]) == 0; ++j) {
      sum.add(times_phase(coeffs[order[j]], Phase(flags[order[j]])));
    }
    const Complex acc = sum.value();
    if (detail::keep_combined(acc, eps)) {
      PauliTerm<W> merged{acc, s.string_at(head)};
      merged.string.set_phase(Phase::one());
      out.push_back(merged);
    }
    i = j;
  }
  return out;
}

template <std::size_t W>
PauliSumSoA<W> truncate(const PauliSumSoA<W>& s, double eps) {
  detail::check_eps(eps);
  PauliSumSoA<W> out(s.num_qubits());
  for (std::size_t t = 0; t < s.size(); ++t) {
    const Complex c = s.coeffs()[t];
    if (c != Complex{} && !(std::abs(c) < eps)) out.push_back(s.term_at(t));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Products

/// Uncombined outer product in SoA form, same block order as the AoS
/// version: output[j * |a| + i] = a[i] * b[j]. Within a block the loops run
/// over contiguous word arrays of the left operand.
template <std::size_t W>
PauliSumSoA<W> outer_product(const PauliSumSoA<W>& a, const PauliSumSoA<W>& b, int threads = 0) {
  detail::require_same_size(a.num_qubits(), b.num_qubits());
  const std::size_t rows = a.size(), cols = b.size(), nw = a.word_count();
  PauliSumSoA<W> out(a.num_qubits());
  out.resize(rows * cols);
  const std::ptrdiff_t ncols = static_cast<std::ptrdiff_t>(cols);
#pragma omp parallel num_threads(resolve_threads(threads))
  {
    std::vector<std::uint32_t> phase(rows);
#pragma omp for schedule(static)
    for (std::ptrdiff_t j = 0; j < ncols; ++j) {
      const std::size_t base = static_cast<std::size_t>(j) * rows;
      const unsigned right_flags = b.flags()[j];
      std::fill(phase.begin(), phase.end(), 0u);
      for (std::size_t w = 0; w < nw; ++w) {
        const std::uint64_t bx = b.x_words(w)[j], bz = b.z_words(w)[j];
        const std::uint64_t* ax = a.x_words(w).data();
        const std::uint64_t* az = a.z_words(w).data();
        std::uint64_t* ox = out.x_words(w).data() + base;
        std::uint64_t* oz = out.z_words(w).data() + base;
        std::uint32_t* ph = phase.data();
#pragma omp simd
        for (std::size_t i = 0; i < rows; ++i) {
          ph[i] += detail::word_product_phase(ax[i], az[i], bx, bz);
          ox[i] = ax[i] ^ bx;
          oz[i] = az[i] ^ bz;
        }
      }
      const Complex right = b.coeffs()[j];
      std::uint8_t* of = out.flags().data() + base;
      Complex* oc = out.coeffs().data() + base;
      for (std::size_t i = 0; i < rows; ++i) {
        of[i] = static_cast<std::uint8_t>((a.flags()[i] + right_flags + phase[i]) & 3u);
        oc[i] = cmul(a.coeffs()[i], right);
      }
    }
  }
  return out;
}

template <std::size_t W>
PauliSumSoA<W> multiply(const PauliSumSoA<W>& a, const PauliSumSoA<W>& b, int threads = 0,
                        double eps = 0.0) {
  return sort_and_combine(outer_product(a, b, threads), eps);
}

/// Element-wise pair products; every loop walks one contiguous word array.
template <std::size_t W>
PauliSumSoA<W> pair_multiply(const PauliSumSoA<W>& a, const PauliSumSoA<W>& b) {
  detail::require_same_size(a.num_qubits(), b.num_qubits());
  if (a.size() != b.size()) throw DimensionError("pair lists differ in length");
  const std::size_t m = a.size();
  PauliSumSoA<W> out(a.num_qubits());
  out.resize(m);
  std::uint8_t* of = out.flags().data();
  const std::uint8_t* af = a.flags().data();
  const std::uint8_t* bf = b.flags().data();
  for (std::size_t t = 0; t < m; ++t) of[t] = static_cast<std::uint8_t>(af[t] + bf[t]);
  for (std::size_t w = 0; w < a.word_count(); ++w) {
    const std::uint64_t *ax = a.x_words(w).data(), *az = a.z_words(w).data();
    const std::uint64_t *bx = b.x_words(w).data(), *bz = b.z_words(w).data();
    std::uint64_t *ox = out.x_words(w).data(), *oz = out.z_words(w).data();
#pragma omp simd
    for (std::size_t t = 0; t < m; ++t) {
      of[t] = static_cast<std::uint8_t>(of[t] + detail::word_product_phase(ax[t], az[t], bx[t], bz[t]));
      ox[t] = ax[t] ^ bx[t];
      oz[t] = az[t] ^ bz[t];
    }
  }
  for (std::size_t t = 0; t < m; ++t) {
    of[t] &= 3u;
    out.coeffs()[t] = cmul(a.coeffs()[t], b.coeffs()[t]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gates

/// Conjugates every term in place. Only the word arrays holding the target
/// qubits and the flags array are touched.
template <std::size_t W>
void apply_clifford(PauliSumSoA<W>& s, const CliffordOp& op) {
  validate(op, s.num_qubits());
  const std::size_t m = s.size();
  std::uint8_t* flags = s.flags().data();
  const std::size_t wa = op.a / 64;
  const unsigned sa = static_cast<unsigned>(op.a % 64);
  const std::uint64_t ma = std::uint64_t{1} << sa;
  std::uint64_t* xa = s.x_words(wa).data();
  std::uint64_t* za = s.z_words(wa).data();

  if (!is_two_qubit(op.gate)) {
    const bool hadamard = op.gate == Gate::H;
#pragma omp simd
    for (std::size_t t = 0; t < m; ++t) {
      std::uint64_t x = (xa[t] >> sa) & 1u, z = (za[t] >> sa) & 1u;
      const std::uint64_t flip =
          hadamard ? detail::CliffordBits::h(x, z) : detail::CliffordBits::s(x, z);
      xa[t] = (xa[t] & ~ma) | (x << sa);
      za[t] = (za[t] & ~ma) | (z << sa);
      flags[t] ^= static_cast<std::uint8_t>(flip << 1);
    }
    return;
  }

  const std::size_t wb = op.b / 64;
  const unsigned sb = static_cast<unsigned>(op.b % 64);
  const std::uint64_t mb = std::uint64_t{1} << sb;
  std::uint64_t* xb = s.x_words(wb).data();
  std::uint64_t* zb = s.z_words(wb).data();
  const bool cnot = op.gate == Gate::CNOT;
  // xa/xb may alias when both qubits share a word; each element is read fully
  // before it is written.
  for (std::size_t t = 0; t < m; ++t) {
    std::uint64_t x0 = (xa[t] >> sa) & 1u, z0 = (za[t] >> sa) & 1u;
    std::uint64_t x1 = (xb[t] >> sb) & 1u, z1 = (zb[t] >> sb) & 1u;
    const std::uint64_t flip = cnot ? detail::CliffordBits::cnot(x0, z0, x1, z1)
                                    : detail::CliffordBits::cz(x0, z0, x1, z1);
    xa[t] = (xa[t] & ~ma) | (x0 << sa);
    za[t] = (za[t] & ~ma) | (z0 << sa);
    xb[t] = (xb[t] & ~mb) | (x1 << sb);
    zb[t] = (zb[t] & ~mb) | (z1 << sb);
    flags[t] ^= static_cast<std::uint8_t>(flip << 1);
  }
}

}  // namespace pauli
