/*
   Copyright 2026 The qmads Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "scalar.hpp"
#include "tensor.hpp"

namespace qmads {

/// Text format:
///   rmatrix N=<n>
///   i j k l <scalar>      R(e_k (x) e_l) has coefficient <scalar> at e_i (x) e_j, indices 1-based
/// Blank lines and lines starting with '#' are ignored. Entries listed twice are an error.
inline TensorOperator<Scalar> read_rmatrix(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = 0;
  auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream hs(line.substr(first));
    std::string tag, dim;
    hs >> tag >> dim;
    if (tag != "rmatrix" || dim.rfind("N=", 0) != 0) fail("expected header 'rmatrix N=<n>'");
    try {
      n = std::stoi(dim.substr(2));
    } catch (const std::exception&) {
      fail("bad dimension '" + dim + "'");
    }
    if (n < 1) fail("dimension must be positive");
    break;
  }
  if (n == 0) throw ParseError("missing 'rmatrix N=<n>' header");
  TensorOperator<Scalar> R(n, 2);
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    int idx[4];
    for (int& x : idx) {
      if (!(ls >> x)) fail("expected four indices");
      if (x < 1 || x > n) fail("index " + std::to_string(x) + " out of range 1.." + std::to_string(n));
    }
    std::string expr;
    std::getline(ls, expr);
    if (expr.find_first_not_of(" \t\r") == std::string::npos) fail("missing scalar expression");
    Scalar v;
    try {
      v = parse_scalar(expr);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    Index r = pack_index({idx[0] - 1, idx[1] - 1}, n), c = pack_index({idx[2] - 1, idx[3] - 1}, n);
    if (!R.get(r, c).is_zero()) fail("duplicate entry");
    R.set(r, c, v);
  }
  return R;
}

inline TensorOperator<Scalar> read_rmatrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_rmatrix(in);
}

inline TensorOperator<Scalar> parse_rmatrix(const std::string& text) {
  std::istringstream in(text);
  return read_rmatrix(in);
}

/// Canonical text: entries in row-major order of (i j k l), scalars in canonical printed form.
inline std::string write_rmatrix(const TensorOperator<Scalar>& R) {
  if (R.arity() != 2) throw ArityError("an R-matrix has arity 2");
  std::ostringstream os;
  const int n = R.n();
  os << "rmatrix N=" << n << "\n";
  R.for_each([&](Index r, Index c, const Scalar& v) {
    auto rd = unpack_index(r, n, 2);
    auto cd = unpack_index(c, n, 2);
    os << rd[0] + 1 << " " << rd[1] + 1 << " " << cd[0] + 1 << " " << cd[1] + 1 << " " << v.str() << "\n";
  });
  return os.str();
}

}  // namespace qmads
