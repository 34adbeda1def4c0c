#include "gpi/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace gpi {
namespace {

using Poly = std::vector<Rational>;  // dense, constant term first

int pdeg(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

void ptrim(Poly& p) { p.resize(static_cast<size_t>(pdeg(p) + 1)); }

Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  ptrim(r);
  return r;
}

// a = q*b + r, returns q, leaves remainder in a.
Poly pdivmod(Poly& a, const Poly& b) {
  int db = pdeg(b);
  Poly q;
  int da = pdeg(a);
  if (da < db) return q;
  q.assign(static_cast<size_t>(da - db + 1), Rational(0));
  while ((da = pdeg(a)) >= db && da >= 0) {
    Rational f = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
    q[static_cast<size_t>(da - db)] = f;
    for (int i = 0; i <= db; ++i)
      a[static_cast<size_t>(da - db + i)] -= f * b[static_cast<size_t>(i)];
  }
  ptrim(a);
  return q;
}

Poly cyclotomic_poly(int m, std::map<int, Poly>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
  Poly num(static_cast<size_t>(m + 1), Rational(0));
  num[0] = -1;
  num[static_cast<size_t>(m)] = 1;
  Poly den{Rational(1)};
  for (int d = 1; d < m; ++d)
    if (m % d == 0) den = pmul(den, cyclotomic_poly(d, cache));
  Poly q = pdivmod(num, den);
  cache[m] = q;
  return q;
}

}  // namespace

CycField::CycField(int order) : order_(order) {
  if (order < 1) fail("BadOrder", "cyclotomic order must be >= 1");
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  phi_ = cyclotomic_poly(order, cache);
}

FieldPtr CycField::get(int order) {
  static std::map<int, FieldPtr> made;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = made[order];
  if (!slot) slot = FieldPtr(new CycField(order));
  return slot;
}

CycScalar::CycScalar(FieldPtr f) : field_(std::move(f)) {
  c_.assign(static_cast<size_t>(field_->degree()), Rational(0));
}

CycScalar::CycScalar(FieldPtr f, const Rational& r) : CycScalar(std::move(f)) {
  // Phi_1 = x - 1, so for m = 1 the residue of a constant is still itself.
  c_[0] = r;
}

CycScalar::CycScalar(FieldPtr f, std::vector<Rational> coeffs)
    : field_(std::move(f)) {
  Poly p = std::move(coeffs);
  pdivmod(p, field_->phi());
  p.resize(static_cast<size_t>(field_->degree()), Rational(0));
  c_ = std::move(p);
}

CycScalar CycScalar::zeta(const FieldPtr& f, long power) {
  long m = f->order();
  long k = ((power % m) + m) % m;
  std::vector<Rational> p(static_cast<size_t>(k + 1), Rational(0));
  p[static_cast<size_t>(k)] = 1;
  return CycScalar(f, std::move(p));
}

bool CycScalar::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  if (field_->order() == 1) return true;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycScalar::rational_value() const {
  if (!is_rational()) fail("NotRational", "scalar has nonzero zeta part");
  return c_.empty() ? Rational(0) : c_[0];
}

void CycScalar::check_same(const CycScalar& o) const {
  if (!field_ || !o.field_) fail("OrderMismatch", "uninitialized scalar");
  if (field_->order() != o.field_->order())
    fail("OrderMismatch", "operands live in different cyclotomic fields (m=" +
                              std::to_string(field_->order()) + " vs m=" +
                              std::to_string(o.field_->order()) + ")");
}

CycScalar CycScalar::operator-() const {
  CycScalar r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
  check_same(o);
  CycScalar r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
  check_same(o);
  CycScalar r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
  check_same(o);
  Poly p = pmul(c_, o.c_);
  return CycScalar(field_, std::move(p));
}

void CycScalar::addmul(const CycScalar& a, const CycScalar& b) {
  a.check_same(b);
  check_same(a);
  // Fast path: both effectively rational (common in sweeps over Q).
  bool arat = true, brat = true;
  for (size_t i = 1; i < a.c_.size(); ++i)
    if (a.c_[i] != 0) { arat = false; break; }
  for (size_t i = 1; i < b.c_.size(); ++i)
    if (b.c_[i] != 0) { brat = false; break; }
  if (arat) {
    if (a.c_[0] == 0) return;
    for (size_t i = 0; i < c_.size(); ++i)
      if (b.c_[i] != 0) c_[i] += a.c_[0] * b.c_[i];
    return;
  }
  if (brat) {
    if (b.c_[0] == 0) return;
    for (size_t i = 0; i < c_.size(); ++i)
      if (a.c_[i] != 0) c_[i] += b.c_[0] * a.c_[i];
    return;
  }
  CycScalar p = a * b;
  *this += p;
}

CycScalar CycScalar::inv() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero");
  // Extended Euclid in Q[x] against Phi_m.
  Poly r0 = field_->phi(), r1 = c_;
  ptrim(r1);
  Poly s0{}, s1{Rational(1)};  // coefficients of *this in the combination
  while (pdeg(r1) > 0) {
    Poly rem = r0;
    Poly q = pdivmod(rem, r1);
    Poly s2 = s0;  // s2 = s0 - q*s1
    Poly qs = pmul(q, s1);
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    ptrim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (pdeg(r1) != 0)
    fail("DivisionByZero", "element is a zero divisor mod Phi_m");
  Rational lead = r1[0];
  for (auto& x : s1) x /= lead;
  return CycScalar(field_, std::move(s1));
}

bool CycScalar::operator==(const CycScalar& o) const {
  check_same(o);
  return c_ == o.c_;
}

CycScalar CycScalar::conj() const {
  long m = field_->order();
  if (m <= 2) return *this;
  CycScalar r(field_);
  // substitute zeta -> zeta^{m-1}
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    CycScalar t = zeta(field_, -static_cast<long>(i));
    for (auto& x : t.c_) x *= c_[i];
    r += t;
  }
  return r;
}

CycScalar CycScalar::pow(long e) const {
  CycScalar base = *this;
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  CycScalar r = one(field_);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (...) {
    fail("SyntaxError", "bad rational literal '" + s + "'");
  }
}

std::string CycScalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    first = false;
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// scalar := ['+'|'-'] atom (('+'|'-') atom)*
// atom   := rational ['*' zterm] | zterm
// zterm  := 'z' ['^' int]
struct ScalarParser {
  const std::string& s;
  size_t pos = 0;
  FieldPtr field;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }

  Rational number() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("SyntaxError", "expected number at position " + std::to_string(pos) + " in '" + s + "'");
    std::string num = s.substr(start, pos - start);
    if (eat('/')) {
      skip();
      size_t d0 = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == d0) fail("SyntaxError", "expected denominator at position " + std::to_string(pos));
      num += "/" + s.substr(d0, pos - d0);
    }
    return parse_rational(num);
  }

  long zexp() {
    if (eat('^')) {
      skip();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) fail("SyntaxError", "expected exponent at position " + std::to_string(pos));
      return std::stol(s.substr(start, pos - start));
    }
    return 1;
  }

  CycScalar atom() {
    skip();
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      return CycScalar::zeta(field, zexp());
    }
    Rational r = number();
    if (eat('*')) {
      skip();
      if (pos >= s.size() || s[pos] != 'z')
        fail("SyntaxError", "expected 'z' after '*' at position " + std::to_string(pos));
      ++pos;
      CycScalar t = CycScalar::zeta(field, zexp());
      return CycScalar(field, r) * t;
    }
    return CycScalar(field, r);
  }

  CycScalar parse() {
    CycScalar acc(field);
    bool neg = eat('-');
    if (!neg) eat('+');
    CycScalar a = atom();
    acc = neg ? -a : a;
    for (;;) {
      skip();
      if (pos >= s.size()) break;
      if (eat('+')) acc += atom();
      else if (eat('-')) acc += -atom();
      else fail("SyntaxError", "unexpected character at position " + std::to_string(pos) + " in '" + s + "'");
    }
    return acc;
  }
};

}  // namespace

CycScalar CycScalar::parse(const std::string& text, const FieldPtr& f) {
  ScalarParser p{text, 0, f};
  CycScalar r = p.parse();
  return r;
}

}  // namespace gpi
