// Copyright 2026 The diagram-kernel Authors
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

// Brute-force reference computations, independent of the library's
// contraction and product paths.

#pragma once

#include <set>
#include <tuple>
#include <vector>

#include "dk/tensor.hpp"

namespace dktest {

// plain triple loop over flattened matrices
template <typename T>
std::vector<T> naive_matmul(const std::vector<T>& lhs,
                            const std::vector<T>& rhs, std::size_t a,
                            std::size_t b, std::size_t c) {
  using S = dk::tensor::Semiring<T>;
  std::vector<T> out(a * c, S::zero());
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      T sum = S::zero();
      for (std::size_t k = 0; k < b; ++k) {
        sum = S::add(sum, S::mul(lhs[i * b + k], rhs[k * c + j]));
      }
      out[i * c + j] = sum;
    }
  }
  return out;
}

// Kronecker product of flattened matrices: entry at row (i, j), col (k, l)
template <typename T>
std::vector<T> naive_kron(const std::vector<T>& lhs, const std::vector<T>& rhs,
                          std::size_t a, std::size_t b, std::size_t c,
                          std::size_t d) {
  using S = dk::tensor::Semiring<T>;
  std::vector<T> out(a * c * b * d, S::zero());
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t k = 0; k < b; ++k) {
      for (std::size_t j = 0; j < c; ++j) {
        for (std::size_t l = 0; l < d; ++l) {
          out[(i * c + j) * (b * d) + (k * d + l)] =
              S::mul(lhs[i * b + k], rhs[j * d + l]);
        }
      }
    }
  }
  return out;
}

// Relational composition by tuple enumeration: pairs (i, j) such that some
// shared k relates them on both sides.
inline std::set<std::pair<std::size_t, std::size_t>> naive_join(
    const std::set<std::pair<std::size_t, std::size_t>>& r,
    const std::set<std::pair<std::size_t, std::size_t>>& s) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [i, k] : r) {
    for (const auto& [k2, j] : s) {
      if (k == k2) out.insert({i, j});
    }
  }
  return out;
}

}  // namespace dktest
