#pragma once

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gainline/group.hpp"

namespace gainline {

using Complex = std::complex<double>;

/// An element of the group algebra CG: a finite complex combination of group elements.
///
/// Terms are kept sorted by element index with no exactly-zero coefficient, so two
/// elements compare equal iff they have the same coefficients.
class AlgebraElement {
 public:
  using Term = std::pair<Element, Complex>;

  /// The zero vector of CG.
  explicit AlgebraElement(GroupPtr group);
  /// coeff * g.
  AlgebraElement(GroupPtr group, Element g, Complex coeff = 1.0);
  AlgebraElement(GroupPtr group, std::vector<Term> terms);

  const GroupPtr& group() const { return group_; }
  const std::vector<Term>& terms() const { return terms_; }
  Complex coefficient(Element g) const;

  bool is_zero() const { return terms_.empty(); }
  /// The group element g when this equals 1*g exactly.
  std::optional<Element> as_group_element() const;

  /// f* = sum conj(f_x) x^{-1}.
  AlgebraElement star() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(Complex scalar);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(Complex c, AlgebraElement a) { return a *= c; }
  /// Convolution product; StructuralError on a group mismatch.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  /// Largest coefficient difference, for approximate comparisons.
  double distance(const AlgebraElement& other) const;

 private:
  void normalize();

  GroupPtr group_;
  std::vector<Term> terms_;
};

AlgebraElement alg_multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_star(const AlgebraElement& a);

enum class Side { Left, Right };

/// Dense rows x cols matrix over CG. Every entry shares the matrix's group.
class CGMatrix {
 public:
  CGMatrix(GroupPtr group, std::size_t rows, std::size_t cols);

  static CGMatrix zeros(GroupPtr group, std::size_t rows, std::size_t cols) {
    return CGMatrix(std::move(group), rows, cols);
  }
  /// diag(1_G, ..., 1_G).
  static CGMatrix identity(GroupPtr group, std::size_t n);
  /// c * diag(1_G, ..., 1_G).
  static CGMatrix scalar_identity(GroupPtr group, std::size_t n, Complex c);
  /// diag(g_1, ..., g_n) with pure group entries.
  static CGMatrix diagonal(GroupPtr group, std::span<const Element> diag);
  /// Matrix whose (i, j) entry is the group element elements[i][j], or zero when absent.
  static CGMatrix from_elements(GroupPtr group,
                                const std::vector<std::vector<std::optional<Element>>>& elements);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const GroupPtr& group() const { return group_; }

  const AlgebraElement& operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, AlgebraElement value);
  void set(std::size_t i, std::size_t j, Element g) { set(i, j, AlgebraElement(group_, g)); }

  /// (A*)_{i,j} = (A_{j,i})*.
  CGMatrix star() const;

  CGMatrix& operator+=(const CGMatrix& other);
  CGMatrix& operator-=(const CGMatrix& other);
  friend CGMatrix operator+(CGMatrix a, const CGMatrix& b) { return a += b; }
  friend CGMatrix operator-(CGMatrix a, const CGMatrix& b) { return a -= b; }
  friend CGMatrix operator*(const CGMatrix& a, const CGMatrix& b);

  friend bool operator==(const CGMatrix& a, const CGMatrix& b);

  /// Largest coefficient difference across all entries.
  double distance(const CGMatrix& other) const;
  /// True when every entry is zero or a single group element with coefficient 1.
  bool is_group_valued() const;

 private:
  void check_index(std::size_t i, std::size_t j) const;

  GroupPtr group_;
  std::size_t rows_, cols_;
  std::vector<AlgebraElement> entries_;
};

CGMatrix matmul(const CGMatrix& a, const CGMatrix& b);
CGMatrix mat_star(const CGMatrix& a);
/// Entrywise a*A (Side::Left) or A*a (Side::Right).
CGMatrix scalar_mul(const AlgebraElement& a, const CGMatrix& m, Side side);

/// An element g of G^n viewed as the diagonal matrix diag(g_1, ..., g_n).
struct DiagonalGroupMatrix {
  std::vector<Element> diag;

  std::size_t size() const { return diag.size(); }
  CGMatrix to_matrix(const GroupPtr& group) const { return CGMatrix::diagonal(group, diag); }
  /// Coordinatewise inverse, which is also the star of the embedded matrix.
  DiagonalGroupMatrix inverse(const FiniteGroup& group) const;
};

}  // namespace gainline
