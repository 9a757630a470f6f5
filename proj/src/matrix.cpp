#include "samop/matrix.hpp"

#include <map>
#include <vector>

namespace samop {

long exact_rank(const DenseMat& m) {
  DenseMat a = m;
  const long rows = a.rows(), cols = a.cols();
  long rank = 0;
  long row = 0;
  for (long col = 0; col < cols && row < rows; ++col) {
    long pivot = -1;
    for (long r = row; r < rows; ++r) {
      if (!a(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    GaussianRational inv = GaussianRational(1) / a(row, col);
    for (long r = row + 1; r < rows; ++r) {
      if (a(r, col).is_zero()) continue;
      GaussianRational f = a(r, col) * inv;
      for (long c = col; c < cols; ++c) a(r, c) -= f * a(row, c);
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

// Sparse row: sorted (col, value) pairs, value != 0.
using SparseRow = std::vector<std::pair<long, GaussianRational>>;

SparseRow axpy(const SparseRow& x, const GaussianRational& f, const SparseRow& y) {
  // x - f*y with both inputs sorted by column.
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(f * y[j].second));
      ++j;
    } else {
      GaussianRational v = x[i].second - f * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

long exact_rank(const SpMat& m) {
  // Column-ordered elimination on sparse rows grouped by leading column.
  // The truncation matrices are near partial permutations, so this stays
  // close to linear; dense fill only appears around TriMatrix blocks.
  std::map<long, std::vector<SparseRow>> by_lead;
  SpMat cm = m;
  cm.makeCompressed();
  std::vector<SparseRow> rows(static_cast<std::size_t>(m.rows()));
  for (long k = 0; k < cm.outerSize(); ++k) {
    for (SpMat::InnerIterator it(cm, k); it; ++it) {
      if (!it.value().is_zero())
        rows[static_cast<std::size_t>(it.row())].emplace_back(it.col(), it.value());
    }
  }
  for (auto& r : rows) {
    std::sort(r.begin(), r.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!r.empty()) by_lead[r.front().first].push_back(std::move(r));
  }
  long rank = 0;
  while (!by_lead.empty()) {
    auto it = by_lead.begin();
    long col = it->first;
    std::vector<SparseRow> bucket = std::move(it->second);
    by_lead.erase(it);
    SparseRow pivot = std::move(bucket.front());
    ++rank;
    GaussianRational inv = GaussianRational(1) / pivot.front().second;
    for (std::size_t i = 1; i < bucket.size(); ++i) {
      GaussianRational f = bucket[i].front().second * inv;
      SparseRow reduced = axpy(bucket[i], f, pivot);
      if (!reduced.empty()) by_lead[reduced.front().first].push_back(std::move(reduced));
    }
    (void)col;
  }
  return rank;
}

SpMat sparse_pow(const SpMat& m, long long k) {
  // Exact zeros from cancellation may be stored explicitly; the rank routine
  // ignores them, so no pruning pass is needed.
  SpMat acc(m.rows(), m.cols());
  acc.setIdentity();
  SpMat base = m;
  for (long long e = k; e > 0; e >>= 1) {
    if (e & 1) acc = SpMat(acc * base);
    if (e > 1) base = SpMat(base * base);
  }
  return acc;
}

DenseMat dense_pow(const DenseMat& m, long long k) {
  DenseMat acc = DenseMat::Identity(m.rows(), m.cols());
  DenseMat base = m;
  for (long long e = k; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

DenseMat adjoint_retriangularized(const DenseMat& m) {
  const long n = m.rows();
  DenseMat out(n, n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c)
      out(r, c) = m(n - 1 - c, n - 1 - r).conj();
  return out;
}

bool is_upper_triangular(const DenseMat& m) {
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < r && c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

bool strictly_upper(const DenseMat& m) {
  if (!is_upper_triangular(m)) return false;
  for (long r = 0; r < m.rows(); ++r)
    if (!m(r, r).is_zero()) return false;
  return true;
}

bool is_diagonal(const DenseMat& m) {
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c)
      if (r != c && !m(r, c).is_zero()) return false;
  return true;
}

}  // namespace samop
