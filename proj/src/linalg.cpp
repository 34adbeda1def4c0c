#include "gpi/linalg.hpp"

#include <optional>

namespace gpi {

Mat::Mat(int rows, int cols, const FieldPtr& f)
    : rows_(rows), cols_(cols), field_(f) {
  a_.assign(static_cast<size_t>(rows) * cols, CycScalar(f));
}

std::vector<int> Mat::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (!at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    CycScalar piv = at(r, c).inv();
    for (int j = c; j < cols_; ++j) at(r, j) = at(r, j) * piv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      CycScalar f = at(i, c);
      for (int j = c; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int Mat::rank() const {
  Mat m = *this;
  return static_cast<int>(m.rref().size());
}

std::vector<std::vector<CycScalar>> Mat::nullspace() const {
  Mat m = *this;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<CycScalar>> basis;
  for (int freec = 0; freec < cols_; ++freec) {
    if (is_pivot[static_cast<size_t>(freec)]) continue;
    std::vector<CycScalar> v(static_cast<size_t>(cols_), CycScalar(field_));
    v[static_cast<size_t>(freec)] = CycScalar::one(field_);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), freec);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<CycScalar>> Mat::solve(
    const std::vector<CycScalar>& b) const {
  Mat aug(rows_, cols_ + 1, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[static_cast<size_t>(i)];
  }
  std::vector<int> pivots = aug.rref();
  for (int c : pivots)
    if (c == cols_) return std::nullopt;
  std::vector<CycScalar> x(static_cast<size_t>(cols_), CycScalar(field_));
  for (size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), cols_);
  return x;
}

std::vector<Vec> rref_basis(const std::vector<Vec>& vecs, const FieldPtr& f) {
  if (vecs.empty()) return {};
  int cols = static_cast<int>(vecs[0].size());
  Mat m(static_cast<int>(vecs.size()), cols, f);
  for (size_t i = 0; i < vecs.size(); ++i)
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = vecs[i][static_cast<size_t>(j)];
  size_t nr = m.rref().size();
  std::vector<Vec> out;
  for (size_t i = 0; i < nr; ++i) {
    Vec v;
    v.reserve(static_cast<size_t>(cols));
    for (int j = 0; j < cols; ++j) v.push_back(m.at(static_cast<int>(i), j));
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const std::vector<Vec>& rref, const Vec& v, const FieldPtr& f) {
  // Reduce v against the echelon rows; zero remainder means membership.
  Vec w = v;
  for (const Vec& row : rref) {
    size_t lead = 0;
    while (lead < row.size() && row[lead].is_zero()) ++lead;
    if (lead == row.size()) continue;
    if (w[lead].is_zero()) continue;
    CycScalar c = w[lead] / row[lead];
    for (size_t j = lead; j < w.size(); ++j) w[j] = w[j] - c * row[j];
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, const FieldPtr& f) {
  std::vector<Vec> ra = rref_basis(a, f), rb = rref_basis(b, f);
  if (ra.size() != rb.size()) return false;
  for (size_t i = 0; i < ra.size(); ++i)
    if (!(ra[i] == rb[i])) return false;
  return true;
}

int span_dim(const std::vector<Vec>& vecs, const FieldPtr& f) {
  return static_cast<int>(rref_basis(vecs, f).size());
}

}  // namespace gpi
