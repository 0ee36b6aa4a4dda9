/* Copyright (C) 2026 The chartwist authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef CHARTWIST_LINALG_HPP
#define CHARTWIST_LINALG_HPP

// Exact sparse linear algebra over cyclotomic numbers.

#include "chartwist/cyclotomic.hpp"

#include <map>
#include <optional>
#include <vector>

namespace chartwist {

/// Sorted (column, nonzero value) pairs.
using SparseVec = std::vector<std::pair<int, Cyclotomic>>;

SparseVec to_sparse(const std::map<int, Cyclotomic> &m);
std::vector<Cyclotomic> to_dense(const SparseVec &v, std::size_t n);
SparseVec from_dense(const std::vector<Cyclotomic> &v);
/// a + s * b
SparseVec axpy(const SparseVec &a, const Cyclotomic &s, const SparseVec &b);

/**
 * Incremental row reduction. Rows are kept with leading coefficient 1 and
 * fully reduced against each other (RREF) when requested.
 */
class RowReducer {
public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}
  /// Reduces v against the current pivots; returns true if it was independent.
  bool add(const SparseVec &v);
  /// Reduces v by the current rows without adding it.
  SparseVec reduce(const SparseVec &v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  /// Pivot rows in reduced row echelon form, sorted by pivot column.
  std::vector<SparseVec> rref() const;

private:
  std::size_t cols_;
  std::map<int, SparseVec> rows_; // pivot column -> row
};

std::size_t rank(const std::vector<SparseVec> &rows, std::size_t cols);
/// Basis of {x : A x = 0} for A given by rows.
std::vector<SparseVec> nullspace(const std::vector<SparseVec> &rows, std::size_t cols);
/// Some x with A x = b, if any.
std::optional<std::vector<Cyclotomic>> solve(const std::vector<SparseVec> &rows, std::size_t cols,
                                             const std::vector<Cyclotomic> &b);

} // namespace chartwist

#endif
