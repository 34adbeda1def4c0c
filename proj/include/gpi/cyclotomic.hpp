#ifndef GPI_CYCLOTOMIC_HPP
#define GPI_CYCLOTOMIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <memory>
#include <string>
#include <vector>

#include "gpi/error.hpp"

namespace gpi {

using Rational = boost::multiprecision::mpq_rational;

/// The ambient field Q(zeta_m): order m together with the m-th cyclotomic
/// polynomial, computed once and shared by every scalar of that order.
class CycField {
public:
  static std::shared_ptr<const CycField> get(int order);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  // Monic coefficients of Phi_m, constant term first.
  const std::vector<Rational>& phi() const { return phi_; }

private:
  explicit CycField(int order);
  int order_;
  std::vector<Rational> phi_;
};

using FieldPtr = std::shared_ptr<const CycField>;

/// An exact element of Q(zeta_m), stored as the reduced residue polynomial
/// in zeta modulo Phi_m. Immutable value type.
class CycScalar {
public:
  CycScalar() = default;  // unusable until assigned; zero of no field
  explicit CycScalar(FieldPtr f);                       // zero
  CycScalar(FieldPtr f, const Rational& r);             // rational constant
  CycScalar(FieldPtr f, std::vector<Rational> coeffs);  // residue, reduced on entry

  static CycScalar zeta(const FieldPtr& f, long power = 1);
  static CycScalar one(const FieldPtr& f) { return CycScalar(f, Rational(1)); }

  const FieldPtr& field() const { return field_; }
  int order() const { return field_->order(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  CycScalar operator-() const;
  CycScalar operator+(const CycScalar& o) const;
  CycScalar operator-(const CycScalar& o) const;
  CycScalar operator*(const CycScalar& o) const;
  CycScalar inv() const;
  CycScalar operator/(const CycScalar& o) const { return *this * o.inv(); }
  bool operator==(const CycScalar& o) const;
  bool operator!=(const CycScalar& o) const { return !(*this == o); }

  CycScalar& operator+=(const CycScalar& o);
  // this += a*b, avoiding temporaries in hot loops.
  void addmul(const CycScalar& a, const CycScalar& b);

  // Galois automorphism zeta -> zeta^{m-1}; complex conjugation.
  CycScalar conj() const;
  CycScalar pow(long e) const;

  std::string str() const;

  static CycScalar parse(const std::string& text, const FieldPtr& f);

private:
  void check_same(const CycScalar& o) const;
  FieldPtr field_;
  std::vector<Rational> c_;
};

// Textual rational for CLI/JSON use: "3", "-5/7".
std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace gpi

#endif
