#include "gainline/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gainline/error.hpp"

namespace gainline {

namespace {

void require_same(const GroupPtr& a, const GroupPtr& b, const char* what) {
  if (!same_group(a, b)) throw StructuralError(std::string(what) + ": operands belong to different groups");
}

}  // namespace

AlgebraElement::AlgebraElement(GroupPtr group) : group_(std::move(group)) {
  if (!group_) throw StructuralError("algebra element needs a group");
}

AlgebraElement::AlgebraElement(GroupPtr group, Element g, Complex coeff) : AlgebraElement(std::move(group)) {
  if (!group_->contains(g)) throw StructuralError("algebra element: group element out of range");
  if (coeff != Complex(0.0)) terms_.emplace_back(g, coeff);
}

AlgebraElement::AlgebraElement(GroupPtr group, std::vector<Term> terms)
    : AlgebraElement(std::move(group)) {
  for (const auto& [g, c] : terms)
    if (!group_->contains(g)) throw StructuralError("algebra element: group element out of range");
  terms_ = std::move(terms);
  normalize();
}

void AlgebraElement::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.second == Complex(0.0); });
  terms_ = std::move(merged);
}

Complex AlgebraElement::coefficient(Element g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const Term& t, Element e) { return t.first < e; });
  return it != terms_.end() && it->first == g ? it->second : Complex(0.0);
}

std::optional<Element> AlgebraElement::as_group_element() const {
  if (terms_.size() == 1 && terms_[0].second == Complex(1.0)) return terms_[0].first;
  return std::nullopt;
}

AlgebraElement AlgebraElement::star() const {
  AlgebraElement out(group_);
  out.terms_.reserve(terms_.size());
  for (const auto& [g, c] : terms_) out.terms_.emplace_back(group_->inverse(g), std::conj(c));
  out.normalize();
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same(group_, other.group_, "algebra sum");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same(group_, other.group_, "algebra difference");
  for (const auto& [g, c] : other.terms_) terms_.emplace_back(g, -c);
  normalize();
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex scalar) {
  for (auto& t : terms_) t.second *= scalar;
  normalize();
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a.group_, b.group_, "algebra product");
  AlgebraElement out(a.group_);
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [x, fx] : a.terms_)
    for (const auto& [y, hy] : b.terms_) out.terms_.emplace_back(a.group_->multiply(x, y), fx * hy);
  out.normalize();
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return same_group(a.group_, b.group_) && a.terms_ == b.terms_;
}

double AlgebraElement::distance(const AlgebraElement& other) const {
  require_same(group_, other.group_, "algebra distance");
  double worst = 0.0;
  for (const auto& [g, c] : (*this - other).terms_) worst = std::max(worst, std::abs(c));
  return worst;
}

AlgebraElement alg_multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }
AlgebraElement alg_star(const AlgebraElement& a) { return a.star(); }

// ---------------------------------------------------------------------------

CGMatrix::CGMatrix(GroupPtr group, std::size_t rows, std::size_t cols)
    : group_(std::move(group)), rows_(rows), cols_(cols) {
  if (!group_) throw StructuralError("matrix needs a group");
  entries_.assign(rows * cols, AlgebraElement(group_));
}

CGMatrix CGMatrix::identity(GroupPtr group, std::size_t n) {
  return scalar_identity(std::move(group), n, 1.0);
}

CGMatrix CGMatrix::scalar_identity(GroupPtr group, std::size_t n, Complex c) {
  CGMatrix m(group, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, AlgebraElement(group, kIdentity, c));
  return m;
}

CGMatrix CGMatrix::diagonal(GroupPtr group, std::span<const Element> diag) {
  CGMatrix m(group, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

CGMatrix CGMatrix::from_elements(GroupPtr group,
                                 const std::vector<std::vector<std::optional<Element>>>& elements) {
  const std::size_t rows = elements.size();
  const std::size_t cols = rows ? elements[0].size() : 0;
  CGMatrix m(group, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (elements[i].size() != cols) throw StructuralError("ragged element matrix");
    for (std::size_t j = 0; j < cols; ++j)
      if (elements[i][j]) m.set(i, j, *elements[i][j]);
  }
  return m;
}

void CGMatrix::check_index(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw StructuralError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") out of range");
}

const AlgebraElement& CGMatrix::operator()(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return entries_[i * cols_ + j];
}

void CGMatrix::set(std::size_t i, std::size_t j, AlgebraElement value) {
  check_index(i, j);
  require_same(group_, value.group(), "matrix assignment");
  entries_[i * cols_ + j] = std::move(value);
}

CGMatrix CGMatrix::star() const {
  CGMatrix out(group_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = entries_[i * cols_ + j].star();
  return out;
}

CGMatrix& CGMatrix::operator+=(const CGMatrix& other) {
  require_same(group_, other.group_, "matrix sum");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw StructuralError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

CGMatrix& CGMatrix::operator-=(const CGMatrix& other) {
  require_same(group_, other.group_, "matrix difference");
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw StructuralError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

CGMatrix operator*(const CGMatrix& a, const CGMatrix& b) {
  require_same(a.group_, b.group_, "matrix product");
  if (a.cols_ != b.rows_)
    throw StructuralError("matrix product: inner dimensions " + std::to_string(a.cols_) + " and " +
                          std::to_string(b.rows_) + " differ");
  CGMatrix out(a.group_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::vector<AlgebraElement::Term> acc;
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const auto& x = a.entries_[i * a.cols_ + l];
        const auto& y = b.entries_[l * b.cols_ + j];
        if (x.is_zero() || y.is_zero()) continue;
        const AlgebraElement xy = x * y;
        acc.insert(acc.end(), xy.terms().begin(), xy.terms().end());
      }
      out.entries_[i * out.cols_ + j] = AlgebraElement(a.group_, std::move(acc));
    }
  }
  return out;
}

bool operator==(const CGMatrix& a, const CGMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && same_group(a.group_, b.group_) &&
         a.entries_ == b.entries_;
}

double CGMatrix::distance(const CGMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw StructuralError("matrix distance: shape mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    worst = std::max(worst, entries_[k].distance(other.entries_[k]));
  return worst;
}

bool CGMatrix::is_group_valued() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const AlgebraElement& e) {
    return e.is_zero() || e.as_group_element().has_value();
  });
}

CGMatrix matmul(const CGMatrix& a, const CGMatrix& b) { return a * b; }
CGMatrix mat_star(const CGMatrix& a) { return a.star(); }

CGMatrix scalar_mul(const AlgebraElement& a, const CGMatrix& m, Side side) {
  require_same(a.group(), m.group(), "scalar multiplication");
  CGMatrix out(m.group(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.set(i, j, side == Side::Left ? a * m(i, j) : m(i, j) * a);
  return out;
}

DiagonalGroupMatrix DiagonalGroupMatrix::inverse(const FiniteGroup& group) const {
  DiagonalGroupMatrix out;
  out.diag.reserve(diag.size());
  for (auto g : diag) out.diag.push_back(group.inverse(g));
  return out;
}

}  // namespace gainline
