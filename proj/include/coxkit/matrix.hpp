#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "coxkit/laurent.hpp"

namespace coxkit {

template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < n_ && j < n_);
    return a_[i * n_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < n_ && j < n_);
    return a_[i * n_ + j];
  }

  SquareMatrix transpose() const {
    SquareMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  SquareMatrix scaled(const T& c) const {
    SquareMatrix m(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = c * a_[k];
    return m;
  }

  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
    assert(x.n_ == y.n_);
    SquareMatrix m(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const T& c = x(i, k);
        if (c == T()) continue;
        for (std::size_t j = 0; j < x.n_; ++j) m(i, j) += c * y(k, j);
      }
    return m;
  }

  friend SquareMatrix operator+(const SquareMatrix& x, const SquareMatrix& y) {
    assert(x.n_ == y.n_);
    SquareMatrix m(x.n_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = x.a_[k] + y.a_[k];
    return m;
  }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

using IntMatrix = SquareMatrix<std::int64_t>;
using LaurentMatrix = SquareMatrix<Laurent>;

inline LaurentMatrix to_laurent(const IntMatrix& m) {
  LaurentMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = Laurent(m(i, j));
  return out;
}

inline IntMatrix at_one(const LaurentMatrix& m) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(i, j).at_one();
  return out;
}

}  // namespace coxkit
