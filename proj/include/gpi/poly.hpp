#ifndef GPI_POLY_HPP
#define GPI_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "gpi/cyclotomic.hpp"
#include "gpi/group.hpp"

namespace gpi {

/// Variable x_{i,g}: index i >= 1 and a group element. Variables with the
/// same index but distinct degrees are distinct.
using GVar = std::pair<int, int>;
using GMonomial = std::vector<GVar>;

// Canonical ordering: length first, then lexicographic.
struct MonoLess {
  bool operator()(const GMonomial& a, const GMonomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of the free G-graded algebra F<X_G>; zero coefficients never stored.
class GradedPolynomial {
public:
  GradedPolynomial(GroupPtr g, FieldPtr f) : group_(std::move(g)), field_(std::move(f)) {}

  const GroupPtr& group() const { return group_; }
  const FieldPtr& field() const { return field_; }
  const std::map<GMonomial, CycScalar, MonoLess>& terms() const { return terms_; }

  void add_term(const GMonomial& m, const CycScalar& c);
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  GradedPolynomial operator+(const GradedPolynomial& o) const;
  GradedPolynomial operator-(const GradedPolynomial& o) const;
  GradedPolynomial operator*(const GradedPolynomial& o) const;
  GradedPolynomial scaled(const CycScalar& s) const;
  bool operator==(const GradedPolynomial& o) const;

  // Group degree of a monomial: ordered product of its variables' degrees.
  int monomial_degree(const GMonomial& m) const;

  std::vector<GVar> variables() const;          // distinct, sorted
  std::vector<int> variable_indices() const;    // distinct indices

  std::string str() const;

private:
  GroupPtr group_;
  FieldPtr field_;
  std::map<GMonomial, CycScalar, MonoLess> terms_;
};

/// Ungraded noncommutative polynomial in x_1, x_2, ...; degrees are chosen
/// later, either by embedding over a group or by pinning one degree per index.
class Poly {
public:
  explicit Poly(FieldPtr f) : field_(std::move(f)) {}

  const FieldPtr& field() const { return field_; }
  const std::map<std::vector<int>, CycScalar>& terms() const { return terms_; }

  void add_term(const std::vector<int>& m, const CycScalar& c);
  bool is_zero() const { return terms_.empty(); }
  Poly operator*(const Poly& o) const;
  Poly operator+(const Poly& o) const;

  std::vector<int> variable_indices() const;
  int max_index() const;

  std::string str() const;

private:
  FieldPtr field_;
  std::map<std::vector<int>, CycScalar> terms_;
};

// --- operations --------------------------------------------------------------

GradedPolynomial parse_poly(const std::string& text, const GroupPtr& g, const FieldPtr& f);

// rho_g: the sub-sum of terms of monomial degree g.
GradedPolynomial project(const GradedPolynomial& f, int g);

GradedPolynomial transpose(const GradedPolynomial& f);
Poly transpose(const Poly& f);

// f-check = f(x_1..x_m) * transpose(f)(y_1..y_m), y_i = x_{m+i}.
Poly check_product(const Poly& f);

GradedPolynomial psi_quotient(const GradedPolynomial& f, const QuotientMap& q);
bool is_q_stable(const GradedPolynomial& f, const QuotientMap& q);

// The alternating staircase polynomial L_{n^2} in x_1..x_d, y_1..y_d
// (y_i appears as index d+i), with interleaved odd-size blocks.
Poly regev(int n, const FieldPtr& f, bool force = false);

// Layout of regev(n): per block, whether it draws from x or y and its size.
std::vector<std::pair<bool, int>> regev_blocks(int n);  // true = x block

GradedPolynomial ungraded_embed(const Poly& f, const GroupPtr& g,
                                size_t term_cap = 2'000'000);

// x_i -> x_{i, degrees[i-1]}.
GradedPolynomial with_degrees(const Poly& f, const std::vector<int>& degrees,
                              const GroupPtr& g);

bool is_multilinear(const GradedPolynomial& f);
bool is_multilinear(const Poly& f);

}  // namespace gpi

#endif
