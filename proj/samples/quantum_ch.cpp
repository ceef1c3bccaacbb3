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

// Checks the quantum Cayley-Hamilton identity of the reflection equation algebra built on the
// standard Hecke symmetry of C^2, and prints its characteristic polynomial.

#include <iostream>

#include "qmads/qmads.hpp"

int main() {
  using namespace qmads;
  auto b = builtin_braiding("uq-gl", 2);
  auto a = present(AlgebraKind::RE, b);
  auto cp = characteristic_polynomial(a);
  for (int s = cp.degree(); s >= 0; --s)
    std::cout << "t^" << s << ": " << cp.coefficients[static_cast<std::size_t>(s)].str(a.alphabet()) << "\n";
  auto report = verify_ch(a);
  std::cout << report.to_text();
  return report.passed() ? 0 : 1;
}
