#include "pauli/hamiltonian_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pauli {
namespace {

std::string at_line(std::size_t lineno, const std::string& what) {
  return "line " + std::to_string(lineno) + ": " + what;
}

double parse_double(std::string_view tok, std::size_t lineno) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(at_line(lineno, "bad number '" + std::string(tok) + "'"));
  }
  if (!std::isfinite(v)) throw ParseError(at_line(lineno, "non-finite coefficient"));
  return v;
}

}  // namespace

RawHamiltonian parse_hamiltonian(std::istream& is) {
  RawHamiltonian h;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string re, im, label, extra;
    if (!(ls >> re)) continue;
    if (!(ls >> im >> label)) throw ParseError(at_line(lineno, "expected '<re> <im> <label>'"));
    if (ls >> extra) throw ParseError(at_line(lineno, "unexpected token '" + extra + "'"));
    for (std::size_t q = 0; q < label.size(); ++q) {
      try {
        letter_from_char(label[q], q);
      } catch (const ParseError& e) {
        throw ParseError(at_line(lineno, e.what()));
      }
    }
    if (h.num_qubits == 0) {
      h.num_qubits = label.size();
    } else if (label.size() != h.num_qubits) {
      throw ParseError(at_line(lineno, "label has " + std::to_string(label.size()) +
                                           " qubits, expected " + std::to_string(h.num_qubits)));
    }
    h.terms.push_back({Complex{parse_double(re, lineno), parse_double(im, lineno)}, label});
  }
  return h;
}

RawHamiltonian read_hamiltonian_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_hamiltonian(in);
}

std::string format_coefficient(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_terms(std::ostream& os, std::span<const LabeledTerm> terms) {
  for (const auto& t : terms) {
    os << format_coefficient(t.coeff.real()) << ' ' << format_coefficient(t.coeff.imag()) << ' '
       << t.label << '\n';
  }
}

void write_terms_file(const std::filesystem::path& path, std::span<const LabeledTerm> terms) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_terms(out, terms);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace pauli
