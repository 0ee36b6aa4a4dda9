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
#include "chartwist/linalg.hpp"

#include "chartwist/error.hpp"

namespace chartwist {

SparseVec to_sparse(const std::map<int, Cyclotomic> &m) {
  SparseVec out;
  for (const auto &[k, v] : m)
    if (!v.is_zero())
      out.emplace_back(k, v);
  return out;
}

std::vector<Cyclotomic> to_dense(const SparseVec &v, std::size_t n) {
  std::vector<Cyclotomic> out(n);
  for (const auto &[k, x] : v)
    out[k] = x;
  return out;
}

SparseVec from_dense(const std::vector<Cyclotomic> &v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

SparseVec axpy(const SparseVec &a, const Cyclotomic &s, const SparseVec &b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Cyclotomic v = a[i].second + s * b[j].second;
      if (!v.is_zero())
        out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec RowReducer::reduce(const SparseVec &v) const {
  SparseVec cur = v;
  // Eliminate pivot columns left to right; each step only adds entries to
  // the right of the pivot, so a forward scan suffices.
  std::size_t pos = 0;
  while (pos < cur.size()) {
    auto it = rows_.find(cur[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    const int col = cur[pos].first;
    cur = axpy(cur, -cur[pos].second, it->second);
    // entries before pos are untouched; restart scan at the first column > col
    pos = 0;
    while (pos < cur.size() && cur[pos].first <= col)
      ++pos;
  }
  return cur;
}

bool RowReducer::add(const SparseVec &v) {
  SparseVec r = reduce(v);
  if (r.empty())
    return false;
  const Cyclotomic inv = r.front().second.inverse();
  for (auto &[k, x] : r)
    x *= inv;
  rows_.emplace(r.front().first, std::move(r));
  return true;
}

std::vector<SparseVec> RowReducer::rref() const {
  std::vector<SparseVec> out;
  // Back substitution from the last pivot upward.
  std::map<int, SparseVec> reduced;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec row = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t p = 1; p < row.size(); ++p) {
        auto r = reduced.find(row[p].first);
        if (r != reduced.end()) {
          row = axpy(row, -row[p].second, r->second);
          changed = true;
          break;
        }
      }
    }
    reduced.emplace(it->first, std::move(row));
  }
  for (auto &[k, row] : reduced)
    out.push_back(std::move(row));
  return out;
}

std::size_t rank(const std::vector<SparseVec> &rows, std::size_t cols) {
  RowReducer r(cols);
  for (const auto &v : rows)
    r.add(v);
  return r.rank();
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec> &rows, std::size_t cols) {
  RowReducer r(cols);
  for (const auto &v : rows)
    r.add(v);
  auto rref = r.rref();
  std::vector<char> pivot(cols, 0);
  for (const auto &row : rref)
    pivot[row.front().first] = 1;
  std::vector<SparseVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot[f])
      continue;
    std::map<int, Cyclotomic> v;
    v[static_cast<int>(f)] = Cyclotomic(1);
    for (const auto &row : rref)
      for (const auto &[k, x] : row)
        if (k == static_cast<int>(f))
          v[row.front().first] = -x;
    basis.push_back(to_sparse(v));
  }
  return basis;
}

std::optional<std::vector<Cyclotomic>> solve(const std::vector<SparseVec> &rows, std::size_t cols,
                                             const std::vector<Cyclotomic> &b) {
  if (rows.size() != b.size())
    throw Error(ErrorCode::InvalidArgument, "solve: right-hand side has the wrong length");
  // Augmented column `cols` carries b.
  RowReducer r(cols + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVec v = rows[i];
    if (!b[i].is_zero())
      v.emplace_back(static_cast<int>(cols), b[i]);
    r.add(v);
  }
  std::vector<Cyclotomic> x(cols);
  for (const auto &row : r.rref()) {
    const int p = row.front().first;
    if (p == static_cast<int>(cols))
      return std::nullopt; // 0 = nonzero
    for (const auto &[k, v] : row)
      if (k == static_cast<int>(cols))
        x[p] = v;
  }
  return x;
}

} // namespace chartwist
