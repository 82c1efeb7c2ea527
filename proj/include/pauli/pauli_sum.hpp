#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pauli/errors.hpp"
#include "pauli/parallel.hpp"
#include "pauli/pauli_string.hpp"

namespace pauli {

using Complex = std::complex<double>;

/// Plain (a * b) without the NaN/Inf recovery path of operator*; terms are
/// finite by invariant.
inline Complex cmul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

template <std::size_t W>
struct PauliTerm {
  Complex coeff;
  PauliString<W> string;

  bool operator==(const PauliTerm&) const = default;
};

/// Coefficient and label as read from text.
struct LabeledTerm {
  Complex coeff;
  std::string label;

  bool operator==(const LabeledTerm&) const = default;
};

/// Array-of-structures Pauli sum: each term's words, flags and coefficient
/// are stored together in one contiguous vector.
template <std::size_t W>
class PauliSum {
 public:
  using Term = PauliTerm<W>;

  explicit PauliSum(std::size_t n) : n_(n) {
    if (n > PauliString<W>::kCapacity) {
      throw CapacityError(std::to_string(n) + " qubits exceed tier capacity " +
                          std::to_string(PauliString<W>::kCapacity));
    }
  }

  PauliSum(std::size_t n, std::vector<Term> terms) : PauliSum(n) {
    for (const auto& t : terms) check_term(t);
    terms_ = std::move(terms);
  }

  /// Terms in input order. `n` is required when `entries` is empty.
  static PauliSum from_labels(std::span<const LabeledTerm> entries,
                              std::optional<std::size_t> n = std::nullopt) {
    if (entries.empty() && !n) throw DimensionError("empty term list needs an explicit qubit count");
    const std::size_t nq = n ? *n : entries.front().label.size();
    PauliSum s(nq);
    s.terms_.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].label.size() != nq) {
        throw DimensionError("term " + std::to_string(i) + " has " +
                             std::to_string(entries[i].label.size()) + " qubits, expected " +
                             std::to_string(nq));
      }
      s.push_back({entries[i].coeff, PauliString<W>::from_label(entries[i].label)});
    }
    return s;
  }

  std::size_t num_qubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  const Term& operator[](std::size_t i) const { return terms_[i]; }
  Term& operator[](std::size_t i) { return terms_[i]; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::span<const Term> terms() const { return terms_; }
  std::span<Term> terms() { return terms_; }

  void reserve(std::size_t m) { terms_.reserve(m); }
  std::size_t capacity() const { return terms_.capacity(); }

  void push_back(const Term& t) {
    check_term(t);
    terms_.push_back(t);
  }

  bool operator==(const PauliSum&) const = default;

 private:
  void check_term(const Term& t) const {
    detail::require_same_size(n_, t.string.num_qubits());
    if (!is_finite(t.coeff)) throw ValueError("non-finite coefficient");
  }

  std::size_t n_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Canonical order

/// Three-way comparison on (z words, x words), word index ascending,
/// unsigned. Phase is ignored.
template <std::size_t W>
int compare_canonical(const PauliString<W>& a, const PauliString<W>& b) {
  const auto &az = a.z_words(), &bz = b.z_words();
  for (std::size_t w = 0; w < W; ++w) {
    if (az[w] != bz[w]) return az[w] < bz[w] ? -1 : 1;
  }
  const auto &ax = a.x_words(), &bx = b.x_words();
  for (std::size_t w = 0; w < W; ++w) {
    if (ax[w] != bx[w]) return ax[w] < bx[w] ? -1 : 1;
  }
  return 0;
}

template <std::size_t W>
using CanonicalKey = std::array<std::uint64_t, 2 * W>;

/// Fixed-width key whose lexicographic order equals compare_canonical.
template <std::size_t W>
CanonicalKey<W> canonical_key(const PauliString<W>& p) {
  CanonicalKey<W> k{};
  for (std::size_t w = 0; w < W; ++w) {
    k[w] = p.z_words()[w];
    k[W + w] = p.x_words()[w];
  }
  return k;
}

template <std::size_t W>
CanonicalKey<W> canonical_key(const PauliTerm<W>& t) {
  return canonical_key(t.string);
}

namespace detail {

inline void check_eps(double eps) {
  if (!(eps >= 0.0)) throw ValueError("threshold must be non-negative");
}

// Coefficients that survive a combine at threshold eps.
inline bool keep_combined(Complex c, double eps) { return std::abs(c) > eps; }

// Neumaier summation per component, so s + (-s) folds to exact zero even
// when duplicates make the plain running sum round.
class CompensatedSum {
 public:
  explicit CompensatedSum(Complex first) : re_(first.real()), im_(first.imag()) {}

  void add(Complex c) {
    step(re_, comp_re_, c.real());
    step(im_, comp_im_, c.imag());
  }

  // A lone term comes back untouched (keeps -0.0 and idempotence bit-exact).
  Complex value() const {
    if (comp_re_ == 0.0 && comp_im_ == 0.0) return {re_, im_};
    return {re_ + comp_re_, im_ + comp_im_};
  }

 private:
  static void step(double& sum, double& comp, double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }

  double re_, im_;
  double comp_re_ = 0.0;
  double comp_im_ = 0.0;
};

}  // namespace detail

/// Sorts by canonical key and merges equal letter patterns, folding each
/// term's phase into its coefficient. Terms with |coeff| <= eps are dropped,
/// so eps = 0 removes exact cancellations only.
template <std::size_t W>
PauliSum<W> sort_and_combine(const PauliSum<W>& s, double eps = 0.0) {
  detail::check_eps(eps);
  const auto terms = s.terms();
  std::vector<std::uint32_t> order(terms.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const int c = compare_canonical(terms[a].string, terms[b].string);
    return c != 0 ? c < 0 : a < b;
  });

  std::vector<PauliTerm<W>> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < order.size();) {
    const auto& head = terms[order[i]];
    detail::CompensatedSum sum(times_phase(head.coeff, head.string.phase()));
    std::size_t j = i + 1;
    for (; j < order.size() && terms[order[j]].string.same_letters(head.string); ++j) {
      const auto& t = terms[order[j]];
      sum.add(times_phase(t.coeff, t.string.phase()));
    }
    const Complex acc = sum.value();
    if (detail::keep_combined(acc, eps)) {
      PauliTerm<W> merged{acc, head.string};
      merged.string.set_phase(Phase::one());
      out.push_back(merged);
    }
    i = j;
  }
  return PauliSum<W>(s.num_qubits(), std::move(out));
}

/// True if `s` is strictly sorted by canonical key with all phases zero.
template <std::size_t W>
bool is_canonical(const PauliSum<W>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].string.phase() != Phase::one()) return false;
    if (i > 0 && compare_canonical(s[i - 1].string, s[i].string) >= 0) return false;
  }
  return true;
}

/// Drops terms with |coeff| < eps (and exact zeros); order is preserved.
template <std::size_t W>
PauliSum<W> truncate(const PauliSum<W>& s, double eps) {
  detail::check_eps(eps);
  std::vector<PauliTerm<W>> out;
  out.reserve(s.size());
  for (const auto& t : s) {
    if (t.coeff != Complex{} && !(std::abs(t.coeff) < eps)) out.push_back(t);
  }
  return PauliSum<W>(s.num_qubits(), std::move(out));
}

// ---------------------------------------------------------------------------
// Products

/// Uncombined outer product: output[j * |a| + i] = a[i] * b[j]. Each
/// right-hand term owns one contiguous block, so workers never share output.
template <std::size_t W>
PauliSum<W> outer_product(const PauliSum<W>& a, const PauliSum<W>& b, int threads = 0) {
  detail::require_same_size(a.num_qubits(), b.num_qubits());
  const std::size_t rows = a.size(), cols = b.size();
  std::vector<PauliTerm<W>> out(rows * cols);
  const auto at = a.terms();
  const auto bt = b.terms();
  const std::ptrdiff_t ncols = static_cast<std::ptrdiff_t>(cols);
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
  for (std::ptrdiff_t j = 0; j < ncols; ++j) {
    const PauliTerm<W>& right = bt[j];
    PauliTerm<W>* block = out.data() + j * rows;
    for (std::size_t i = 0; i < rows; ++i) {
      block[i].coeff = cmul(at[i].coeff, right.coeff);
      block[i].string = multiply(at[i].string, right.string);
    }
  }
  return PauliSum<W>(a.num_qubits(), std::move(out));
}

/// Canonical product a * b.
template <std::size_t W>
PauliSum<W> multiply(const PauliSum<W>& a, const PauliSum<W>& b, int threads = 0, double eps = 0.0) {
  return sort_and_combine(outer_product(a, b, threads), eps);
}

/// Element-wise products a[t] * b[t] for equally sized pair lists.
template <std::size_t W>
PauliSum<W> pair_multiply(const PauliSum<W>& a, const PauliSum<W>& b) {
  detail::require_same_size(a.num_qubits(), b.num_qubits());
  if (a.size() != b.size()) throw DimensionError("pair lists differ in length");
  std::vector<PauliTerm<W>> out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    out[t].coeff = cmul(a[t].coeff, b[t].coeff);
    out[t].string = multiply(a[t].string, b[t].string);
  }
  return PauliSum<W>(a.num_qubits(), std::move(out));
}

// ---------------------------------------------------------------------------
// Gates

/// Conjugates every term in place; the term count never changes.
template <std::size_t W>
void apply_clifford(PauliSum<W>& s, const CliffordOp& op) {
  validate(op, s.num_qubits());
  for (auto& t : s.terms()) t.string.apply(op);
}

}  // namespace pauli
