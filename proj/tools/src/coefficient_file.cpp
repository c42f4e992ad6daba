#include "coefficient_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "chebjac/format.hpp"

namespace chebjac::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

double parse_real(std::string_view tok, int line) {
  tok = trim(tok);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(line, "not a number: '" + std::string(tok) + "'");
  }
  if (!std::isfinite(v)) fail(line, "value is not finite");
  return v;
}

int parse_degree(std::string_view tok, int line) {
  tok = trim(tok);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
    fail(line, "degree must be a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

const char* basis_name(FileBasis b) noexcept { return b == FileBasis::cheb ? "cheb" : "jac"; }

CoefficientFile read_coefficient_file(std::istream& in) {
  CoefficientFile file;
  bool have_header = false;
  int N = -1;
  int lineno = 0;
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      if (line == "basis,alpha,beta,N") continue;
      std::vector<std::string_view> fields;
      std::size_t start = 0;
      for (;;) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      if (fields.size() != 4) fail(lineno, "header must read basis,alpha,beta,N");
      const auto basis = trim(fields[0]);
      if (basis == "cheb") {
        file.basis = FileBasis::cheb;
      } else if (basis == "jac") {
        file.basis = FileBasis::jac;
      } else {
        fail(lineno, "basis must be 'cheb' or 'jac', got '" + std::string(basis) + "'");
      }
      file.alpha = parse_real(fields[1], lineno);
      file.beta = parse_real(fields[2], lineno);
      N = parse_degree(fields[3], lineno);
      file.values.reserve(static_cast<std::size_t>(N) + 1);
      have_header = true;
      continue;
    }
    if (file.values.size() == static_cast<std::size_t>(N) + 1) {
      fail(lineno, "more than N+1 = " + std::to_string(N + 1) + " values");
    }
    file.values.push_back(parse_real(line, lineno));
  }
  if (!have_header) throw std::invalid_argument("coefficient file has no header line");
  if (file.values.size() != static_cast<std::size_t>(N) + 1) {
    throw std::invalid_argument("header says N = " + std::to_string(N) + " but file has " +
                                std::to_string(file.values.size()) + " values");
  }
  return file;
}

CoefficientFile read_coefficient_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_coefficient_file(in);
}

void write_coefficient_file(std::ostream& out, const CoefficientFile& file) {
  out << basis_name(file.basis) << ',' << shortest_repr(file.alpha) << ','
      << shortest_repr(file.beta) << ',' << file.degree() << '\n';
  for (double v : file.values) out << shortest_repr(v) << '\n';
}

}  // namespace chebjac::cli
