// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sheaflat/arrangement.hpp"
#include "sheaflat/error.hpp"
#include "sheaflat/field.hpp"

namespace sheaflat {

using AnyArrangement = std::variant<Arrangement<Rationals>, Arrangement<PrimeField>>;

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + msg);
}

/// Integer or a/b.
inline std::pair<mpz_class, mpz_class> parse_fraction(const std::string& tok, std::size_t line) {
  static const std::regex re(R"(([+-]?\d+)(?:/(\d+))?)");
  std::smatch m;
  if (!std::regex_match(tok, m, re)) parse_fail(line, "'" + tok + "' is not an integer or fraction");
  mpz_class num(m[1].str());
  mpz_class den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) parse_fail(line, "zero denominator in '" + tok + "'");
  return {num, den};
}

template <FieldType F>
Arrangement<F> build_checked(const F& field, std::size_t dim,
                             const std::vector<std::vector<std::pair<mpz_class, mpz_class>>>& rows,
                             const std::vector<std::size_t>& lines) {
  std::vector<std::vector<typename F::Scalar>> normals;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<typename F::Scalar> v;
    try {
      for (const auto& [n, d] : rows[i]) v.push_back(field.from_fraction(n, d));
    } catch (const Error& e) {
      parse_fail(lines[i], e.what());
    }
    Matrix<F> one = Matrix<F>::from_rows(field, dim, {v});
    if (rank(one) == 0) parse_fail(lines[i], "zero normal");
    for (std::size_t j = 0; j < normals.size(); ++j) {
      if (rank(Matrix<F>::from_rows(field, dim, {normals[j], v})) == 1) {
        parse_fail(lines[i], "normal is proportional to the one on line " + std::to_string(lines[j]));
      }
    }
    normals.push_back(std::move(v));
  }
  if (normals.empty()) parse_fail(lines.empty() ? 2 : lines.back(), "no hyperplanes");
  return Arrangement<F>(field, dim, std::move(normals));
}

}  // namespace detail

/// Reads the line oriented arrangement format:
///
///   field Q          (or field F<p>, e.g. field F2)
///   dim <n>
///   <c1> ... <cn>    one normal per line; integers or a/b
///
/// '#' starts a comment; blank lines are skipped.
inline AnyArrangement parse_arrangement(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<FieldSpec> spec;
  std::optional<std::size_t> dim;
  std::vector<std::vector<std::pair<mpz_class, mpz_class>>> rows;
  std::vector<std::size_t> lines;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!spec) {
      if (tok.size() != 2 || tok[0] != "field") detail::parse_fail(line_no, "expected 'field Q' or 'field F<p>'");
      if (tok[1] == "Q") {
        spec = FieldSpec{0};
      } else {
        static const std::regex re(R"(F(\d+))");
        std::smatch m;
        if (!std::regex_match(tok[1], m, re)) detail::parse_fail(line_no, "unknown field '" + tok[1] + "'");
        const unsigned long long p = std::stoull(m[1].str());
        if (p >= (1ull << 31) || !is_prime(p)) detail::parse_fail(line_no, m[1].str() + " is not prime");
        spec = FieldSpec{static_cast<std::uint32_t>(p)};
      }
      continue;
    }
    if (!dim) {
      if (tok.size() != 2 || tok[0] != "dim") detail::parse_fail(line_no, "expected 'dim <n>'");
      static const std::regex re(R"(\d+)");
      if (!std::regex_match(tok[1], re) || std::stoull(tok[1]) == 0) {
        detail::parse_fail(line_no, "dimension must be a positive integer");
      }
      dim = std::stoull(tok[1]);
      continue;
    }
    if (tok.size() != *dim) {
      detail::parse_fail(line_no, "expected " + std::to_string(*dim) + " entries, found " + std::to_string(tok.size()));
    }
    std::vector<std::pair<mpz_class, mpz_class>> row;
    for (const auto& t : tok) row.push_back(detail::parse_fraction(t, line_no));
    rows.push_back(std::move(row));
    lines.push_back(line_no);
  }
  if (!spec) detail::parse_fail(line_no, "missing field line");
  if (!dim) detail::parse_fail(line_no, "missing dim line");
  if (spec->is_rational()) return detail::build_checked(Rationals{}, *dim, rows, lines);
  return detail::build_checked(PrimeField(spec->characteristic), *dim, rows, lines);
}

inline AnyArrangement parse_arrangement_string(const std::string& text) {
  std::istringstream in(text);
  return parse_arrangement(in);
}

inline AnyArrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return parse_arrangement(in);
}

/// Writes an arrangement in the format read by parse_arrangement.
template <FieldType F>
std::string format_arrangement(const Arrangement<F>& arr) {
  std::string out = "field " + arr.field().spec().name() + "\ndim " + std::to_string(arr.ambient_dim()) + "\n";
  for (const auto& v : arr.normals()) {
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + arr.field().to_string(v[i]);
    out += "\n";
  }
  return out;
}

}  // namespace sheaflat
