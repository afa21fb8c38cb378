#include "picod/gflin.hpp"

#include <algorithm>

namespace picod {

bool supported_field(int q) { return q == 2 || q == 3 || q == 5; }

int field_inv(int q, int x) {
  if (!supported_field(q)) throw std::invalid_argument("unsupported field F_" + std::to_string(q));
  x %= q;
  for (int y = 1; y < q; ++y)
    if (x * y % q == 1) return y;
  throw std::invalid_argument("zero has no inverse");
}

Matrix::Matrix(int r, int c, int q_) : rows(r), cols(c), q(q_) {
  if (r < 0 || c < 0) throw std::invalid_argument("matrix dimensions must be non-negative");
  if (!supported_field(q_)) throw std::invalid_argument("unsupported field F_" + std::to_string(q_));
  a.assign(static_cast<size_t>(r) * static_cast<size_t>(c), 0);
}

namespace {

// In-place elimination; returns rank. When reduce is set, produces RREF.
int eliminate(Matrix& M, bool reduce) {
  const int q = M.q;
  int r = 0;
  for (int c = 0; c < M.cols && r < M.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < M.rows; ++i)
      if (M.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < M.cols; ++j) std::swap(M.at(pivot, j), M.at(r, j));
    const int inv = field_inv(q, M.at(r, c));
    for (int j = 0; j < M.cols; ++j) M.at(r, j) = static_cast<std::uint8_t>(M.at(r, j) * inv % q);
    const int lo = reduce ? 0 : r + 1;
    for (int i = lo; i < M.rows; ++i) {
      if (i == r || M.at(i, c) == 0) continue;
      const int f = M.at(i, c);
      for (int j = 0; j < M.cols; ++j)
        M.at(i, j) = static_cast<std::uint8_t>((M.at(i, j) + (q - f) * M.at(r, j)) % q);
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank(Matrix M) { return eliminate(M, false); }

Matrix rref(Matrix M) {
  const int r = eliminate(M, true);
  M.a.resize(static_cast<size_t>(r) * static_cast<size_t>(M.cols));
  M.rows = r;
  return M;
}

bool reduces_to_zero(const Matrix& R, std::span<const std::uint8_t> v) {
  if (static_cast<int>(v.size()) != R.cols) throw std::invalid_argument("vector length does not match column count");
  std::vector<std::uint8_t> w(v.begin(), v.end());
  const int q = R.q;
  for (int i = 0; i < R.rows; ++i) {
    int p = 0;
    while (p < R.cols && R.at(i, p) == 0) ++p;
    if (p == R.cols || w[static_cast<size_t>(p)] == 0) continue;
    const int f = w[static_cast<size_t>(p)];  // pivot entries are 1 in RREF
    for (int j = 0; j < R.cols; ++j)
      w[static_cast<size_t>(j)] = static_cast<std::uint8_t>((w[static_cast<size_t>(j)] + (q - f) * R.at(i, j)) % q);
  }
  return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

bool in_rowspace(const Matrix& M, std::span<const std::uint8_t> v) { return reduces_to_zero(rref(M), v); }

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b, std::uint64_t lim) {
  const std::uint64_t s = a + b;
  if (s < a) return lim;  // wrapped
  return std::min(s, lim);
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b, std::uint64_t lim) {
  if (a == 0 || b == 0) return 0;
  if (a > lim / b) return lim;
  return std::min(a * b, lim);
}

}  // namespace

std::uint64_t gaussian_binomial_capped(int m, int l, int q, std::uint64_t cap) {
  if (l < 0 || l > m) return 0;
  const std::uint64_t lim = cap == UINT64_MAX ? cap : cap + 1;
  // G(n, k) = G(n-1, k-1) + q^k G(n-1, k)
  std::vector<std::uint64_t> g(static_cast<size_t>(l) + 1, 0);
  g[0] = 1;
  for (int n = 1; n <= m; ++n) {
    std::uint64_t qk = 1;
    std::vector<std::uint64_t> next(g.size(), 0);
    next[0] = 1;
    for (int k = 1; k <= std::min(n, l); ++k) {
      qk = sat_mul(qk, static_cast<std::uint64_t>(q), lim);
      next[static_cast<size_t>(k)] =
          sat_add(g[static_cast<size_t>(k - 1)], sat_mul(qk, g[static_cast<size_t>(k)], lim), lim);
    }
    g = std::move(next);
  }
  return g[static_cast<size_t>(l)];
}

SubspaceEnumerator::SubspaceEnumerator(int m, int l, int q, std::uint64_t cap) : m_(m), l_(l), q_(q) {
  if (l < 1 || l > m) throw std::invalid_argument("subspace dimension must lie in 1..m");
  if (!supported_field(q)) throw std::invalid_argument("unsupported field F_" + std::to_string(q));
  count_ = gaussian_binomial_capped(m, l, q, cap);
  if (count_ > cap)
    throw BudgetExceeded("subspace count for m=" + std::to_string(m) + ", l=" + std::to_string(l) + ", q=" +
                         std::to_string(q) + " exceeds the cap of " + std::to_string(cap));
  reset();
}

void SubspaceEnumerator::reset() {
  pivots_.resize(static_cast<size_t>(l_));
  for (int i = 0; i < l_; ++i) pivots_[static_cast<size_t>(i)] = i;
  build_free_positions();
  done_ = false;
}

void SubspaceEnumerator::build_free_positions() {
  free_pos_.clear();
  std::vector<bool> is_pivot(static_cast<size_t>(m_), false);
  for (int p : pivots_) is_pivot[static_cast<size_t>(p)] = true;
  for (int i = 0; i < l_; ++i)
    for (int c = pivots_[static_cast<size_t>(i)] + 1; c < m_; ++c)
      if (!is_pivot[static_cast<size_t>(c)]) free_pos_.emplace_back(i, c);
  free_val_.assign(free_pos_.size(), 0);
}

Matrix SubspaceEnumerator::materialize() const {
  Matrix M(l_, m_, q_);
  for (int i = 0; i < l_; ++i) M.at(i, pivots_[static_cast<size_t>(i)]) = 1;
  for (size_t k = 0; k < free_pos_.size(); ++k) M.at(free_pos_[k].first, free_pos_[k].second) = free_val_[k];
  return M;
}

bool SubspaceEnumerator::advance() {
  // odometer over the free entries, then the next pivot combination
  for (size_t k = free_val_.size(); k-- > 0;) {
    if (++free_val_[k] < q_) return true;
    free_val_[k] = 0;
  }
  int i = l_ - 1;
  while (i >= 0 && pivots_[static_cast<size_t>(i)] == m_ - l_ + i) --i;
  if (i < 0) return false;
  ++pivots_[static_cast<size_t>(i)];
  for (int k = i + 1; k < l_; ++k) pivots_[static_cast<size_t>(k)] = pivots_[static_cast<size_t>(k - 1)] + 1;
  build_free_positions();
  return true;
}

std::optional<Matrix> SubspaceEnumerator::next() {
  if (done_) return std::nullopt;
  Matrix M = materialize();
  done_ = !advance();
  return M;
}

}  // namespace picod
