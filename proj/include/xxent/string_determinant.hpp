#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "xxent/errors.hpp"

namespace xxent {

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

/// One-body contractions g_0..g_Lmax. Negative separations follow
/// g_{-m} = g_m (real tables) or g_{-m} = conj(g_m) (complex tables).
template <class T>
class ContractionTable {
 public:
  ContractionTable() = default;
  explicit ContractionTable(std::vector<T> values) : g_(std::move(values)) {
    if (g_.empty()) throw InvalidArgument("contraction table needs at least g_0");
  }

  int max_separation() const noexcept { return static_cast<int>(g_.size()) - 1; }
  std::span<const T> values() const noexcept { return g_; }

  T operator()(int m) const {
    if (m >= 0) return g_.at(static_cast<std::size_t>(m));
    if constexpr (is_complex<T>::value)
      return std::conj(g_.at(static_cast<std::size_t>(-m)));
    else
      return g_.at(static_cast<std::size_t>(-m));
  }

 private:
  std::vector<T> g_;
};

/// Square dense matrix, row-major. Sizes here never exceed a few hundred.
template <class T>
class SmallMatrix {
 public:
  explicit SmallMatrix(int size) : size_(size), a_(static_cast<std::size_t>(size) * size) {}

  int size() const noexcept { return size_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * size_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * size_ + j]; }

 private:
  int size_;
  std::vector<T> a_;
};

/// Determinant by LU factorization with partial pivoting (copy is consumed).
template <class T>
T lu_determinant(SmallMatrix<T> a) {
  const int n = a.size();
  T det = T(1);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double mag = std::abs(a(r, col));
      if (mag > best) {
        best = mag;
        piv = r;
      }
    }
    if (best == 0.0) return T(0);
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a(col, c), a(piv, c));
      det = -det;
    }
    const T p = a(col, col);
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      const T m = a(r, col) / p;
      if (m == T(0)) continue;
      for (int c = col + 1; c < n; ++c) a(r, c) -= m * a(col, c);
    }
  }
  return det;
}

/// (A_L)_{ij} = 2 g_{i-j+1} - delta_{i,j-1}, i, j = 1..L.
template <class T>
SmallMatrix<T> string_matrix(const ContractionTable<T>& g, int L) {
  if (L < 1) throw InvalidArgument("string_matrix: L must be >= 1");
  if (g.max_separation() < L) throw InvalidArgument("string_matrix: table too short for L");
  SmallMatrix<T> a(L);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) a(i, j) = T(2) * g(i - j + 1) - (j == i + 1 ? T(1) : T(0));
  return a;
}

namespace detail {

// Column order 2..L,1 puts the superdiagonal (2 g_0 - 1) on the diagonal.
// At strong fields, where every g is tiny, that ordering keeps the
// elimination working on small entries and the determinant accurate
// relative to its own size.
template <class T>
SmallMatrix<T> rotate_columns(const SmallMatrix<T>& a) {
  const int L = a.size();
  SmallMatrix<T> r(L);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) r(i, j) = a(i, (j + 1) % L);
  return r;
}

inline double rotation_sign(int L) { return (L - 1) % 2 == 0 ? 1.0 : -1.0; }

}  // namespace detail

/// Det(A_L) for a contraction table covering separations 0..L.
template <class T>
T string_determinant(const ContractionTable<T>& g, int L) {
  return T(detail::rotation_sign(L)) * lu_determinant(detail::rotate_columns(string_matrix(g, L)));
}

/// Det(A_L[x]) - Det(A_L[y]) given delta = x - y, without subtracting two
/// determinants: telescopes over columns, each term linear in one column of
/// the difference matrix. `delta` may be any positive multiple of x - y;
/// the result scales accordingly.
template <class T>
T string_determinant_difference(const ContractionTable<T>& x, const ContractionTable<T>& y,
                                const ContractionTable<T>& delta, int L) {
  const auto ax = string_matrix(x, L);
  const auto ay = string_matrix(y, L);
  T total = T(0);
  for (int j = 0; j < L; ++j) {
    SmallMatrix<T> z(L);
    for (int i = 0; i < L; ++i) {
      for (int c = 0; c < L; ++c) {
        if (c < j)
          z(i, c) = ax(i, c);
        else if (c > j)
          z(i, c) = ay(i, c);
        else
          z(i, c) = T(2) * delta(i - c + 1);
      }
    }
    total += lu_determinant(detail::rotate_columns(z));
  }
  return T(detail::rotation_sign(L)) * total;
}

}  // namespace xxent
