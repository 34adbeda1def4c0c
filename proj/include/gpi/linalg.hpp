#ifndef GPI_LINALG_HPP
#define GPI_LINALG_HPP

#include <optional>
#include <vector>

#include "gpi/cyclotomic.hpp"

namespace gpi {

/// Dense matrix over Q(zeta_m). Sizes here are desk scale (dims <= a few
/// hundred rows), so plain fraction-based Gaussian elimination is enough.
class Mat {
public:
  Mat(int rows, int cols, const FieldPtr& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  CycScalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const CycScalar& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref();
  int rank() const;

  // Basis of the right null space, one vector per column of the result.
  std::vector<std::vector<CycScalar>> nullspace() const;

  // Solve A x = b; empty optional when inconsistent.
  std::optional<std::vector<CycScalar>> solve(const std::vector<CycScalar>& b) const;

private:
  int rows_, cols_;
  FieldPtr field_;
  std::vector<CycScalar> a_;
};

// Subspace utilities: vectors are coefficient rows of equal length.
using Vec = std::vector<CycScalar>;

// Reduced row echelon basis of the span; canonical per subspace.
std::vector<Vec> rref_basis(const std::vector<Vec>& vecs, const FieldPtr& f);
bool in_span(const std::vector<Vec>& rref, const Vec& v, const FieldPtr& f);
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, const FieldPtr& f);
int span_dim(const std::vector<Vec>& vecs, const FieldPtr& f);

}  // namespace gpi

#endif
