#pragma once

#include <optional>
#include <vector>

#include "drinfeld/curve_function.hpp"
#include "drinfeld/kfield.hpp"

namespace drinfeld {

class KMatrix {
 public:
  KMatrix() = default;
  KMatrix(const KContext& ctx, int rows, int cols);
  static KMatrix identity(const KContext& ctx, int n);
  static KMatrix scalar(const KElem& c, int n);

  const KContext& context() const noexcept { return *ctx_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  KElem& operator()(int i, int j) { return e_[i * cols_ + j]; }
  const KElem& operator()(int i, int j) const { return e_[i * cols_ + j]; }

  KMatrix& operator+=(const KMatrix& o);
  KMatrix& operator-=(const KMatrix& o);
  friend KMatrix operator+(KMatrix a, const KMatrix& b) { return a += b; }
  friend KMatrix operator-(KMatrix a, const KMatrix& b) { return a -= b; }
  friend KMatrix operator*(const KMatrix& a, const KMatrix& b);
  KMatrix operator-() const;
  bool operator==(const KMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  KMatrix scaled(const KElem& c) const;
  KMatrix twisted(int k) const;
  bool is_zero() const;
  bool is_diagonal() const;

 private:
  const KContext* ctx_ = nullptr;
  int rows_ = 0, cols_ = 0;
  std::vector<KElem> e_;
};

// Solves the (possibly overdetermined) system A x = b over K; nullopt if inconsistent
// or if the solution is not unique.
std::optional<std::vector<KElem>> solve_linear(const KContext& ctx, std::vector<std::vector<KElem>> A,
                                               std::vector<KElem> b);

// Constants c_j in K with target = sum_j c_j basis_j, if they exist.
std::optional<std::vector<KElem>> solve_constants(const CurveFunc& target, const std::vector<CurveFunc>& basis);

}  // namespace drinfeld
