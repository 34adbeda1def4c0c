#ifndef GPI_ALGEBRA_HPP
#define GPI_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpi/cyclotomic.hpp"
#include "gpi/group.hpp"

namespace gpi {

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// A normalized 2-cocycle on H with root-of-unity values in Q(zeta_m).
class Cocycle {
public:
  Cocycle(GroupPtr h, FieldPtr field, std::vector<std::vector<CycScalar>> values);

  static Cocycle trivial(const GroupPtr& h, const FieldPtr& field);

  const GroupPtr& group() const { return h_; }
  const FieldPtr& field() const { return field_; }
  const CycScalar& at(int g, int h) const {
    return values_[static_cast<size_t>(g)][static_cast<size_t>(h)];
  }

private:
  GroupPtr h_;
  FieldPtr field_;
  std::vector<std::vector<CycScalar>> values_;
};

struct SCTerm {
  int k;
  CycScalar c;
};

/// Retained factorization for algebras built as F^alpha(H) tensor M_n,
/// basis index = (h * n + i) * n + j for u_h (x) e_{ij}.
struct TwistedMatrixForm {
  Cocycle cocycle;
  std::vector<int> gtuple;  // degrees (g_1..g_n) of the matrix grading
};

/// Finite-dimensional G-graded algebra given by a homogeneous basis with
/// structure constants over Q(zeta_m). Immutable after validation.
class GradedAlgebra : public std::enable_shared_from_this<GradedAlgebra> {
public:
  GradedAlgebra(FieldPtr field, GroupPtr group, std::vector<std::string> basis_names,
                std::vector<int> degrees,
                std::vector<std::vector<std::vector<SCTerm>>> mul_table,
                std::optional<std::vector<CycScalar>> unit,
                std::optional<TwistedMatrixForm> tm = std::nullopt);

  const FieldPtr& field() const { return field_; }
  const GroupPtr& group() const { return group_; }
  int dim() const { return static_cast<int>(degrees_.size()); }
  const std::string& basis_name(int i) const { return basis_names_[static_cast<size_t>(i)]; }
  int degree(int i) const { return degrees_[static_cast<size_t>(i)]; }
  const std::vector<SCTerm>& mul_terms(int i, int j) const {
    return mul_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  bool is_unital() const { return unit_.has_value(); }
  const std::vector<CycScalar>& unit_coords() const;
  const std::optional<TwistedMatrixForm>& twisted_matrix_form() const { return tm_; }

  // Basis indices of the degree-g component; supp(A) = degrees with nonzero list.
  const std::vector<int>& component(int g) const {
    return components_[static_cast<size_t>(g)];
  }
  std::vector<int> support() const;

private:
  void validate() const;
  FieldPtr field_;
  GroupPtr group_;
  std::vector<std::string> basis_names_;
  std::vector<int> degrees_;
  std::vector<std::vector<std::vector<SCTerm>>> mul_;
  std::optional<std::vector<CycScalar>> unit_;
  std::optional<TwistedMatrixForm> tm_;
  std::vector<std::vector<int>> components_;
};

/// Coefficient vector over a fixed algebra's basis. Value type.
class AlgElement {
public:
  AlgElement(AlgebraPtr a);  // zero
  AlgElement(AlgebraPtr a, std::vector<CycScalar> coords);

  static AlgElement basis(const AlgebraPtr& a, int i);
  static AlgElement unit(const AlgebraPtr& a);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<CycScalar>& coords() const { return c_; }
  CycScalar coord(int i) const { return c_[static_cast<size_t>(i)]; }

  bool is_zero() const;
  AlgElement operator+(const AlgElement& o) const;
  AlgElement operator-(const AlgElement& o) const;
  AlgElement operator*(const AlgElement& o) const;
  AlgElement scaled(const CycScalar& s) const;
  AlgElement operator-() const;
  bool operator==(const AlgElement& o) const;

  // this += s * (b_i * o) style accumulation used by evaluators.
  void add_scaled(const AlgElement& o, const CycScalar& s);
  // this += s * (x * y)
  void add_scaled_product(const AlgElement& x, const AlgElement& y, const CycScalar& s);

  AlgElement component(int g) const;
  bool is_homogeneous(int* deg_out = nullptr) const;
  std::map<int, AlgElement> components() const;  // degree -> part, nonzero only

  std::string str() const;

private:
  void check_same(const AlgElement& o) const;
  AlgebraPtr alg_;
  std::vector<CycScalar> c_;
};

// --- constructors -----------------------------------------------------------

Cocycle cocycle_validate(const GroupPtr& h, const FieldPtr& field,
                         std::vector<std::vector<CycScalar>> values);

AlgebraPtr twisted_group_algebra(const Cocycle& c);

// 1-dimensional algebra F at degree e, graded by an arbitrary group.
AlgebraPtr field_algebra(const FieldPtr& field, const GroupPtr& group);

AlgebraPtr matrix_graded(const AlgebraPtr& b, const std::vector<int>& gtuple);
AlgebraPtr tensor_graded(const AlgebraPtr& a, const AlgebraPtr& b);
AlgebraPtr opposite(const AlgebraPtr& a);
AlgebraPtr regrade_quotient(const AlgebraPtr& a, const QuotientMap& q);

// phi_g = sum_h P_{gh} phi P_h; keys cover all g with nonzero component map.
std::map<int, std::vector<std::vector<CycScalar>>> map_components(
    const std::vector<std::vector<CycScalar>>& phi, const AlgebraPtr& a);

// Star anti-automorphism on twisted-matrix-form algebras.
AlgElement star_involution(const AlgElement& x);

}  // namespace gpi

#endif
