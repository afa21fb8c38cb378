#pragma once

#include <optional>
#include <span>
#include <utility>

#include "picod/common.hpp"

namespace picod {

// Prime fields available for scheme search. q = 2 is the default everywhere.
bool supported_field(int q);
int field_inv(int q, int x);

// Dense row-major matrix over F_q.
struct Matrix {
  int rows = 0, cols = 0, q = 2;
  std::vector<std::uint8_t> a;

  Matrix() = default;
  Matrix(int r, int c, int q_);

  std::uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
  std::uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
  std::span<const std::uint8_t> row(int r) const {
    return {a.data() + static_cast<size_t>(r) * static_cast<size_t>(cols), static_cast<size_t>(cols)};
  }

  bool operator==(const Matrix&) const = default;
};

int rank(Matrix M);

// Reduced row-echelon form with zero rows dropped; the canonical
// representative of a row space.
Matrix rref(Matrix M);

// True iff v lies in the row space of M. Requires len(v) == cols.
bool in_rowspace(const Matrix& M, std::span<const std::uint8_t> v);

// Reduction against a matrix already in RREF (pivot columns ascending).
bool reduces_to_zero(const Matrix& R, std::span<const std::uint8_t> v);

// Number of l-dimensional subspaces of F_q^m, saturating at cap + 1.
std::uint64_t gaussian_binomial_capped(int m, int l, int q, std::uint64_t cap);

// Streams exactly one canonical RREF basis per l-dimensional subspace of
// F_q^m. Restartable via reset(). The constructor throws BudgetExceeded when
// the subspace count exceeds cap.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(int m, int l, int q, std::uint64_t cap = Budgets{}.max_subspaces);

  std::optional<Matrix> next();
  void reset();
  std::uint64_t count() const { return count_; }

 private:
  Matrix materialize() const;
  void build_free_positions();
  bool advance();

  int m_, l_, q_;
  std::uint64_t count_ = 0;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_pos_;
  std::vector<std::uint8_t> free_val_;
  bool done_ = false;
};

}  // namespace picod
