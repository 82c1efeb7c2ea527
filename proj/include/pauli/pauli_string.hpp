#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "pauli/errors.hpp"
#include "pauli/phase.hpp"

namespace pauli {

/// Single-qubit letter; the enumerator value packs (x << 1) | z.
enum class Letter : std::uint8_t { I = 0b00, Z = 0b01, X = 0b10, Y = 0b11 };

constexpr bool x_bit(Letter l) { return (static_cast<unsigned>(l) >> 1) & 1u; }
constexpr bool z_bit(Letter l) { return static_cast<unsigned>(l) & 1u; }
constexpr Letter make_letter(bool x, bool z) {
  return static_cast<Letter>((unsigned{x} << 1) | unsigned{z});
}

char to_char(Letter l);
Letter letter_from_char(char c, std::size_t position);

enum class Gate : std::uint8_t { H, S, CNOT, CZ };

constexpr bool is_two_qubit(Gate g) { return g == Gate::CNOT || g == Gate::CZ; }
std::string_view gate_name(Gate g);

/// One Clifford gate and its targets. For CNOT, `a` is the control and `b`
/// the target; single-qubit gates ignore `b`.
struct CliffordOp {
  Gate gate;
  std::size_t a;
  std::size_t b = 0;

  static constexpr CliffordOp h(std::size_t q) { return {Gate::H, q}; }
  static constexpr CliffordOp s(std::size_t q) { return {Gate::S, q}; }
  static constexpr CliffordOp cnot(std::size_t c, std::size_t t) { return {Gate::CNOT, c, t}; }
  static constexpr CliffordOp cz(std::size_t c, std::size_t t) { return {Gate::CZ, c, t}; }
};

/// Throws IndexError unless every target is below n and two-qubit targets differ.
void validate(const CliffordOp& op, std::size_t n);

constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

namespace detail {

inline std::uint64_t bit_of(std::size_t q) { return std::uint64_t{1} << (q % 64); }

// Returns the sign-flip bit (0 or 1) and updates the four words in place.
// Every argument is a single-bit value at position `shift`; the kernel is
// branch-free so it also serves the SoA loops.
struct CliffordBits {
  static inline std::uint64_t h(std::uint64_t& x, std::uint64_t& z) {
    std::uint64_t flip = x & z;
    std::swap(x, z);
    return flip;
  }
  static inline std::uint64_t s(std::uint64_t& x, std::uint64_t& z) {
    std::uint64_t flip = x & z;
    z ^= x;
    return flip;
  }
  static inline std::uint64_t cnot(std::uint64_t& xc, std::uint64_t& zc, std::uint64_t& xt,
                                   std::uint64_t& zt) {
    std::uint64_t flip = xc & zt & (xt ^ zc ^ 1u);
    xt ^= xc;
    zc ^= zt;
    return flip;
  }
  static inline std::uint64_t cz(std::uint64_t& xc, std::uint64_t& zc, std::uint64_t& xt,
                                 std::uint64_t& zt) {
    std::uint64_t flip = xc & xt & (zc ^ zt);
    zc ^= xt;
    zt ^= xc;
    return flip;
  }
};

}  // namespace detail

/// An n-qubit Pauli operator i^k * P_0 (x) P_1 (x) ... (x) P_{n-1}, stored as
/// two bit vectors of `Words` 64-bit words plus a flags byte holding k.
///
/// Qubit q lives at bit q % 64 of word q / 64; qubit 0 is the leftmost label
/// character. Bits at positions >= n are always zero, and Y is stored as
/// (x, z) = (1, 1) with no extra phase folded into the flags.
template <std::size_t Words>
class PauliString {
 public:
  static_assert(Words >= 1);
  static constexpr std::size_t kWords = Words;
  static constexpr std::size_t kCapacity = 64 * Words;

  PauliString() = default;

  /// Identity on n qubits.
  explicit PauliString(std::size_t n) : n_(static_cast<std::uint16_t>(check_capacity(n))) {}

  static PauliString from_label(std::string_view label, Phase phase = {}) {
    if (label.empty()) throw ParseError("empty Pauli label");
    PauliString p(label.size());
    for (std::size_t q = 0; q < label.size(); ++q) {
      p.set_letter(q, letter_from_char(label[q], q));
    }
    p.flags_ = static_cast<std::uint8_t>(phase.exponent());
    return p;
  }

  /// Builds a string from raw words; throws if padding bits are set.
  static PauliString from_words(std::size_t n, std::span<const std::uint64_t> x,
                                std::span<const std::uint64_t> z, Phase phase = {}) {
    PauliString p(n);
    if (x.size() > Words || z.size() > Words) throw CapacityError("too many words for tier");
    for (std::size_t w = 0; w < x.size(); ++w) p.x_[w] = x[w];
    for (std::size_t w = 0; w < z.size(); ++w) p.z_[w] = z[w];
    if (!p.padding_clear()) throw ValueError("bits set beyond qubit count");
    p.flags_ = static_cast<std::uint8_t>(phase.exponent());
    return p;
  }

  std::string label() const {
    std::string s(n_, 'I');
    for (std::size_t q = 0; q < n_; ++q) s[q] = to_char(letter(q));
    return s;
  }

  std::size_t num_qubits() const { return n_; }
  std::size_t word_count() const { return words_for(n_); }

  Phase phase() const { return Phase(flags_); }
  void set_phase(Phase p) { flags_ = static_cast<std::uint8_t>(p.exponent()); }
  std::uint8_t flags() const { return flags_; }

  bool x(std::size_t q) const { return (x_[q / 64] >> (q % 64)) & 1u; }
  bool z(std::size_t q) const { return (z_[q / 64] >> (q % 64)) & 1u; }
  Letter letter(std::size_t q) const { return make_letter(x(q), z(q)); }

  void set_letter(std::size_t q, Letter l) {
    const std::uint64_t m = detail::bit_of(q);
    x_[q / 64] = x_bit(l) ? (x_[q / 64] | m) : (x_[q / 64] & ~m);
    z_[q / 64] = z_bit(l) ? (z_[q / 64] | m) : (z_[q / 64] & ~m);
  }

  /// Full tier-width word arrays; words past word_count() are zero.
  const std::array<std::uint64_t, Words>& x_words() const { return x_; }
  const std::array<std::uint64_t, Words>& z_words() const { return z_; }

  bool padding_clear() const {
    for (std::size_t w = 0; w < Words; ++w) {
      const std::size_t lo = w * 64;
      std::uint64_t valid = 0;
      if (n_ >= lo + 64) valid = ~std::uint64_t{0};
      else if (n_ > lo) valid = (std::uint64_t{1} << (n_ - lo)) - 1;
      if ((x_[w] & ~valid) || (z_[w] & ~valid)) return false;
    }
    return true;
  }

  /// Letters-only equality (ignores phase).
  bool same_letters(const PauliString& o) const { return n_ == o.n_ && x_ == o.x_ && z_ == o.z_; }

  bool operator==(const PauliString&) const = default;

  /// In-place conjugation p -> U p U^dagger.
  void apply(const CliffordOp& op) {
    validate(op, n_);
    const std::size_t a = op.a;
    const std::size_t wa = a / 64, sa = a % 64;
    std::uint64_t xa = (x_[wa] >> sa) & 1u, za = (z_[wa] >> sa) & 1u;
    std::uint64_t flip = 0;
    if (!is_two_qubit(op.gate)) {
      flip = op.gate == Gate::H ? detail::CliffordBits::h(xa, za) : detail::CliffordBits::s(xa, za);
      store_bit(wa, sa, xa, za);
    } else {
      const std::size_t b = op.b;
      const std::size_t wb = b / 64, sb = b % 64;
      std::uint64_t xb = (x_[wb] >> sb) & 1u, zb = (z_[wb] >> sb) & 1u;
      flip = op.gate == Gate::CNOT ? detail::CliffordBits::cnot(xa, za, xb, zb)
                                   : detail::CliffordBits::cz(xa, za, xb, zb);
      store_bit(wa, sa, xa, za);
      store_bit(wb, sb, xb, zb);
    }
    flags_ ^= static_cast<std::uint8_t>(flip << 1);
  }

 private:
  template <std::size_t>
  friend class PauliString;
  template <std::size_t W>
  friend PauliString<W> multiply(const PauliString<W>&, const PauliString<W>&);

  static std::size_t check_capacity(std::size_t n) {
    if (n > kCapacity) {
      throw CapacityError(std::to_string(n) + " qubits exceed tier capacity " +
                          std::to_string(kCapacity));
    }
    return n;
  }

  void store_bit(std::size_t w, std::size_t s, std::uint64_t xb, std::uint64_t zb) {
    const std::uint64_t m = std::uint64_t{1} << s;
    x_[w] = (x_[w] & ~m) | (xb << s);
    z_[w] = (z_[w] & ~m) | (zb << s);
  }

  std::array<std::uint64_t, Words> z_{};
  std::array<std::uint64_t, Words> x_{};
  std::uint16_t n_ = 0;
  std::uint8_t flags_ = 0;
};

namespace detail {

inline void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("qubit count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

/// Letter-product phase exponent for one word of each operand.
/// Per qubit: x1 z1 + x2 z2 + 2 z1 x2 - (x1^x2)(z1^z2), from Y = iXZ.
inline unsigned word_product_phase(std::uint64_t ax, std::uint64_t az, std::uint64_t bx,
                                   std::uint64_t bz) {
  return static_cast<unsigned>(std::popcount(ax & az) + std::popcount(bx & bz) +
                               2 * std::popcount(az & bx) -
                               std::popcount((ax ^ bx) & (az ^ bz)));
}

}  // namespace detail

/// k such that letters(a) * letters(b) = i^k * letters(a XOR b); the stored
/// phases of a and b are not included.
template <std::size_t W>
Phase product_phase(const PauliString<W>& a, const PauliString<W>& b) {
  detail::require_same_size(a.num_qubits(), b.num_qubits());
  unsigned k = 0;
  const auto &ax = a.x_words(), &az = a.z_words(), &bx = b.x_words(), &bz = b.z_words();
  for (std::size_t w = 0; w < W; ++w) k += detail::word_product_phase(ax[w], az[w], bx[w], bz[w]);
  return Phase(k);
}

/// Operator product a * b including both stored phases.
template <std::size_t W>
PauliString<W> multiply(const PauliString<W>& a, const PauliString<W>& b) {
  detail::require_same_size(a.num_qubits(), b.num_qubits());
  PauliString<W> r;
  r.n_ = a.n_;
  unsigned k = a.flags_ + b.flags_;
  for (std::size_t w = 0; w < W; ++w) {
    k += detail::word_product_phase(a.x_[w], a.z_[w], b.x_[w], b.z_[w]);
    r.x_[w] = a.x_[w] ^ b.x_[w];
    r.z_[w] = a.z_[w] ^ b.z_[w];
  }
  r.flags_ = static_cast<std::uint8_t>(k & 3u);
  return r;
}

template <std::size_t W>
PauliString<W> operator*(const PauliString<W>& a, const PauliString<W>& b) {
  return multiply(a, b);
}

/// Parity of popcount(a.x & b.z) + popcount(a.z & b.x).
template <std::size_t W>
unsigned symplectic_inner_product(const PauliString<W>& a, const PauliString<W>& b) {
  detail::require_same_size(a.num_qubits(), b.num_qubits());
  std::uint64_t acc = 0;
  const auto &ax = a.x_words(), &az = a.z_words(), &bx = b.x_words(), &bz = b.z_words();
  for (std::size_t w = 0; w < W; ++w) acc ^= (ax[w] & bz[w]) ^ (az[w] & bx[w]);
  return static_cast<unsigned>(std::popcount(acc) & 1);
}

template <std::size_t W>
bool commutes(const PauliString<W>& a, const PauliString<W>& b) {
  return symplectic_inner_product(a, b) == 0;
}

/// Number of non-identity letters.
template <std::size_t W>
std::size_t weight(const PauliString<W>& p) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < W; ++w) c += std::popcount(p.x_words()[w] | p.z_words()[w]);
  return c;
}

template <std::size_t W>
PauliString<W> apply_clifford(PauliString<W> p, const CliffordOp& op) {
  p.apply(op);
  return p;
}

}  // namespace pauli
