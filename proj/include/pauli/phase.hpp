#pragma once

#include <complex>
#include <cstdint>

namespace pauli {

/// Scalar factor i^k with k in {0,1,2,3}.
///
/// The exponent doubles as the stored flags byte: bit 1 is the sign bit s,
/// bit 0 the imaginary bit m, and k = 2s + m.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(unsigned k) : k_(static_cast<std::uint8_t>(k & 3u)) {}

  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  constexpr unsigned exponent() const { return k_; }
  constexpr bool sign_bit() const { return (k_ >> 1) & 1u; }
  constexpr bool imag_bit() const { return k_ & 1u; }

  std::complex<double> value() const {
    switch (k_) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }

  constexpr Phase operator+(Phase o) const { return Phase(k_ + o.k_); }
  constexpr Phase& operator+=(Phase o) { return *this = *this + o; }
  constexpr Phase operator-() const { return Phase(4u - k_); }
  constexpr bool operator==(const Phase&) const = default;

 private:
  std::uint8_t k_ = 0;
};

/// c * i^k without rounding: multiplying by a power of i only swaps and
/// negates components.
inline std::complex<double> times_phase(std::complex<double> c, Phase p) {
  switch (p.exponent()) {
    case 0: return c;
    case 1: return {-c.imag(), c.real()};
    case 2: return {-c.real(), -c.imag()};
    default: return {c.imag(), -c.real()};
  }
}

}  // namespace pauli
