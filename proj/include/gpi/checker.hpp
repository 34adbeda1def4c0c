#ifndef GPI_CHECKER_HPP
#define GPI_CHECKER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpi/algebra.hpp"
#include "gpi/linalg.hpp"
#include "gpi/mpoly.hpp"
#include "gpi/poly.hpp"

namespace gpi {

/// Graded substitution: each variable x_{i,g} maps to an element of A_g.
struct Assignment {
  std::map<GVar, AlgElement> values;

  const AlgElement& at(const GVar& v) const;  // MissingAssignment on miss
};

// Exact value of f under the assignment; values are checked to be
// homogeneous of their variable's degree (InhomogeneousValue otherwise).
AlgElement evaluate(const GradedPolynomial& f, const AlgebraPtr& a, const Assignment& asg);

/// Value of f at the generic elements y_{i,g} = sum_b t_{i,g,b} b.
/// f is a graded identity of A iff every coordinate polynomial vanishes.
struct GenericElement {
  AlgebraPtr alg;
  std::vector<MPoly> coords;                    // one per basis element
  std::map<int, GVar> var_of_id;                // t-id -> (i, g) it came from
  std::map<int, int> basis_of_id;               // t-id -> basis index

  bool is_zero() const;
};

GenericElement evaluate_generic(const GradedPolynomial& f, const AlgebraPtr& a);

struct IdentityReport {
  bool identity;
  std::optional<Assignment> witness;  // a substitution with nonzero value
  long long checked = 0;
};

IdentityReport is_identity(const GradedPolynomial& f, const AlgebraPtr& a,
                           long long tuple_cap = 10'000'000);

struct CentralityVerdict {
  enum Kind { Identity, Central, Neither } kind;
  std::optional<Assignment> witness;   // nonzero value (Central/Neither branches)
  std::optional<int> noncentral_with;  // basis index failing to commute (Neither)
};

CentralityVerdict is_central(const GradedPolynomial& f, const AlgebraPtr& a,
                             long long tuple_cap = 10'000'000);

// For central f, classifies the identity-degree part rho(f). Raises
// PreconditionFailed when f is not central and DichotomyViolated if rho(f)
// turns out to be neither central nor an identity.
enum class RhoClass { Central, Identity };
RhoClass rho_dichotomy(const GradedPolynomial& f, const AlgebraPtr& a);

/// Semi-decision for strongness: hunts for a homogeneous evaluation with
/// nonzero value but zero identity-degree component. Finding none proves
/// nothing; finding one refutes strongness.
struct StrongReport {
  bool counterexample;
  long long checked;
  std::uint64_t seed;
  std::vector<int> degrees;          // on counterexample
  std::vector<AlgElement> values;    // on counterexample
};

// f is an ungraded multilinear central polynomial of A (verified first;
// PreconditionFailed otherwise). Sweeps every degree tuple over supp(A) and
// every homogeneous basis tuple, then pseudorandom small-integer homogeneous
// combinations up to budget. regev_hint = n routes evaluation through the
// staircase-sum dynamic program instead of term-by-term expansion when f is
// regev(n).
StrongReport strong_falsifier(const Poly& f, const AlgebraPtr& a,
                              long long budget = 200'000,
                              std::uint64_t seed = 0x5eed5eedULL,
                              int regev_hint = 0);

// The paired check for v = L_{n^2}(a..): v * star(v) must have nonzero
// identity-degree part whenever it is nonzero. Requires a twisted-matrix
// form on A.
StrongReport star_product_falsifier(int n, const AlgebraPtr& a);

struct SharpnessRow {
  std::string name;
  int exponent;
  bool identity;
  bool pass;
};

struct SharpnessReport {
  int d;  // max exponent in the family
  bool sharp;
  std::vector<SharpnessRow> rows;
};

SharpnessReport is_sharp(const GradedPolynomial& f,
                         const std::vector<std::pair<AlgebraPtr, int>>& family);

// Direct evaluation of the staircase polynomial L_{n^2} at xs, ys (each of
// size n^2) by dynamic programming over index subsets; never materializes
// the (n^2!)^2 terms.
AlgElement regev_evaluate(int n, const std::vector<AlgElement>& xs,
                          const std::vector<AlgElement>& ys);

/// Degree-e central polynomial produced from the staircase polynomial with
/// n^2 = exponent(A). The polynomial itself is materialized only when small
/// enough (n <= 2); the degree tuple plus DP evaluator reproduce it otherwise.
struct ECentralResult {
  int n;
  std::vector<int> degrees;  // degrees of x_1..x_d then y_1..y_d, d = n^2
  Assignment witness;        // substitution with nonzero central value
  AlgElement value;
  std::optional<GradedPolynomial> poly;
};

ECentralResult find_e_central(const AlgebraPtr& a, long long budget = 5'000'000);

/// Multilinear graded identities at fixed degrees (g_1..g_k): the kernel of
/// the evaluation matrix, coordinates over the k! permutation monomials.
struct IdSpace {
  std::vector<int> degrees;
  std::vector<std::vector<int>> monomials;  // variable orders sigma(1..k)
  std::vector<Vec> kernel;                  // canonical rref basis
  int dimension() const { return static_cast<int>(kernel.size()); }
};

IdSpace multilinear_id_space(const AlgebraPtr& a, const std::vector<int>& degrees,
                             int cap = 4);

struct CompareReport {
  bool equal;
  std::vector<int> witness_degrees;              // on differ
  std::optional<GradedPolynomial> witness;       // identity of one, not the other
};

CompareReport compare_id_spaces(const AlgebraPtr& a1, const AlgebraPtr& a2, int max_len);

// Worker count: GRADEDPI_THREADS when set, hardware concurrency otherwise.
int worker_count();

}  // namespace gpi

#endif
