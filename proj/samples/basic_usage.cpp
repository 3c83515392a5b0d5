// Copyright 2026 The mdlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Computes the annihilator basis of a small array over F_4 and its 1-error
// linear complexity.

#include <iostream>

#include "mdlc/mdlc.hpp"

int main() {
  using namespace mdlc;
  const auto f = gf::make_field(2, 2);  // modulus 1 + x + x^2
  const auto s = seq::random_array(f, {3, 2}, 42);
  std::cout << "array: " << seq::serialize(s) << "\n";

  const auto r = annihilator::compute(s);
  std::cout << "L(s) = " << r.complexity << "\nbasis:\n";
  for (const auto& g : r.basis) std::cout << "  " << g.to_string(f, r.order) << "\n";

  const auto k1 = kerror::k_error_complexity(s, 1, kerror::Mode::exact);
  std::cout << "L_1(s) = " << k1.value << " after " << k1.candidates_examined << " candidates\n";
  return annihilator::verify(s, r) ? 0 : 1;
}
