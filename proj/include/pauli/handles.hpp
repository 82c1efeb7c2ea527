#pragma once

// Tier-erased handles for callers that only know sizes at run time
// (scripting layers, the CLI). Each handle holds exactly one instantiation.

#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <type_traits>
#include <variant>

#include "pauli/grouping.hpp"
#include "pauli/hamiltonian_io.hpp"
#include "pauli/pauli_sum_soa.hpp"
#include "pauli/rotation.hpp"
#include "pauli/tiers.hpp"

namespace pauli {

using AnyString = std::variant<PauliString<1>, PauliString<2>, PauliString<4>, PauliString<8>, PauliString<16>>;
using AnySum = std::variant<PauliSum<1>, PauliSum<2>, PauliSum<4>, PauliSum<8>, PauliSum<16>>;
using AnySumSoA =
    std::variant<PauliSumSoA<1>, PauliSumSoA<2>, PauliSumSoA<4>, PauliSumSoA<8>, PauliSumSoA<16>>;

namespace detail {

template <class T>
struct words_of;
template <std::size_t W>
struct words_of<PauliString<W>> : std::integral_constant<std::size_t, W> {};
template <std::size_t W>
struct words_of<PauliSum<W>> : std::integral_constant<std::size_t, W> {};
template <std::size_t W>
struct words_of<PauliSumSoA<W>> : std::integral_constant<std::size_t, W> {};

// Calls f(x, y) when both alternatives share a tier, otherwise DimensionError.
template <class A, class B, class F>
decltype(auto) visit_same_tier(const A& a, const B& b, F&& f) {
  return std::visit(
      [&](const auto& x, const auto& y) -> decltype(f(std::get<0>(a), std::get<0>(b))) {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (words_of<X>::value == words_of<Y>::value) {
          return f(x, y);
        } else {
          throw DimensionError("qubit counts differ: " + std::to_string(x.num_qubits()) + " vs " +
                               std::to_string(y.num_qubits()));
        }
      },
      a, b);
}

}  // namespace detail

// --- factories -------------------------------------------------------------

inline AnyString make_string(std::string_view label, Phase phase = Phase::one()) {
  if (label.empty()) throw ParseError("empty label");
  return dispatch_tier(label.size(), [&]<std::size_t W>() -> AnyString {
    return PauliString<W>::from_label(label, phase);
  });
}

/// Tier comes from the first label's length (or `n` for an empty list).
inline AnySum make_sum(std::span<const LabeledTerm> terms, std::optional<std::size_t> n = std::nullopt) {
  const std::size_t qubits = n ? *n : terms.empty() ? 0 : terms.front().label.size();
  if (qubits == 0) throw DimensionError("cannot infer qubit count from an empty term list");
  return dispatch_tier(qubits, [&]<std::size_t W>() -> AnySum { return PauliSum<W>::from_labels(terms, n); });
}

inline AnySumSoA make_sum_soa(std::span<const LabeledTerm> terms, std::optional<std::size_t> n = std::nullopt) {
  return std::visit([](const auto& s) -> AnySumSoA { return to_soa(s); }, make_sum(terms, n));
}

// --- queries -----------------------------------------------------------------

template <class Handle>
std::size_t tier_of(const Handle& h) {
  return std::visit([](const auto& x) { return detail::words_of<std::decay_t<decltype(x)>>::value * 64; }, h);
}

template <class Handle>
std::size_t num_qubits(const Handle& h) {
  return std::visit([](const auto& x) { return x.num_qubits(); }, h);
}

inline std::string label(const AnyString& p) {
  return std::visit([](const auto& x) { return x.label(); }, p);
}

inline Phase phase(const AnyString& p) {
  return std::visit([](const auto& x) { return x.phase(); }, p);
}

inline std::vector<LabeledTerm> terms(const AnySum& s) {
  return std::visit([](const auto& x) { return to_labeled_terms(x); }, s);
}

inline std::vector<LabeledTerm> terms(const AnySumSoA& s) {
  return std::visit([](const auto& x) { return to_labeled_terms(to_aos(x)); }, s);
}

// --- mirrored operations -----------------------------------------------------

inline AnyString multiply(const AnyString& a, const AnyString& b) {
  return detail::visit_same_tier(a, b, [](const auto& x, const auto& y) -> AnyString { return x * y; });
}

inline bool commutes(const AnyString& a, const AnyString& b) {
  return detail::visit_same_tier(a, b, [](const auto& x, const auto& y) { return commutes(x, y); });
}

inline AnyString apply_clifford(const AnyString& p, const CliffordOp& op) {
  return std::visit([&](const auto& x) -> AnyString { return apply_clifford(x, op); }, p);
}

template <class Sum>
  requires std::is_same_v<Sum, AnySum> || std::is_same_v<Sum, AnySumSoA>
Sum multiply(const Sum& a, const Sum& b, int threads = 0, double eps = 0.0) {
  return detail::visit_same_tier(a, b, [&](const auto& x, const auto& y) -> Sum { return multiply(x, y, threads, eps); });
}

template <class Sum>
  requires std::is_same_v<Sum, AnySum> || std::is_same_v<Sum, AnySumSoA>
Sum sort_and_combine(const Sum& s, double eps = 0.0) {
  return std::visit([&](const auto& x) -> Sum { return sort_and_combine(x, eps); }, s);
}

template <class Sum>
  requires std::is_same_v<Sum, AnySum> || std::is_same_v<Sum, AnySumSoA>
void apply_clifford(Sum& s, const CliffordOp& op) {
  std::visit([&](auto& x) { apply_clifford(x, op); }, s);
}

template <class Sum>
  requires std::is_same_v<Sum, AnySum> || std::is_same_v<Sum, AnySumSoA>
Sum apply_rotation(const Sum& s, const AnyString& generator, double angle, double eps = 0.0) {
  return detail::visit_same_tier(s, generator, [&](const auto& x, const auto& g) -> Sum {
    return apply_rotation(x, RotationSpec<detail::words_of<std::decay_t<decltype(g)>>::value>{g, angle}, eps);
  });
}

/// chunks == 0 selects the sequential scan.
template <class Sum>
  requires std::is_same_v<Sum, AnySum> || std::is_same_v<Sum, AnySumSoA>
CommutationPartition group(const Sum& s, std::size_t chunks = 0) {
  return std::visit([&](const auto& x) { return chunks == 0 ? group_greedy(x) : group_greedy_parallel(x, chunks); },
                    s);
}

inline AnySum read_hamiltonian(const std::filesystem::path& path) {
  const auto raw = read_hamiltonian_file(path);
  if (raw.terms.empty()) throw DimensionError("no terms in " + path.string());
  return dispatch_tier(raw.num_qubits, [&]<std::size_t W>() -> AnySum { return to_sum<W>(raw); });
}

inline void write_hamiltonian(const std::filesystem::path& path, const AnySum& s) {
  std::visit([&](const auto& x) { write_hamiltonian(path, x); }, s);
}

}  // namespace pauli
