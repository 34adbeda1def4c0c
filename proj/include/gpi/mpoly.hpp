#ifndef GPI_MPOLY_HPP
#define GPI_MPOLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "gpi/cyclotomic.hpp"

namespace gpi {

/// Sparse commutative polynomial over Q(zeta_m) in numbered indeterminates.
/// A monomial is a sorted list of (variable id, exponent) pairs; the empty
/// list is the constant monomial. Only used for generic-element evaluation,
/// so the operation set is deliberately small.
class MPoly {
public:
  using Mono = std::vector<std::pair<int, int>>;

  explicit MPoly(FieldPtr f) : field_(std::move(f)) {}

  static MPoly constant(const CycScalar& c) {
    MPoly p(c.field());
    p.add_term({}, c);
    return p;
  }
  static MPoly var(int id, const FieldPtr& f) {
    MPoly p(f);
    p.add_term({{id, 1}}, CycScalar::one(f));
    return p;
  }

  const FieldPtr& field() const { return field_; }
  const std::map<Mono, CycScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Mono& m, const CycScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  MPoly operator*(const MPoly& o) const {
    MPoly r(field_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) r.add_term(merge(m1, m2), c1 * c2);
    return r;
  }

  // this += c * (a * b), the accumulation pattern of generic products.
  void addmul(const MPoly& a, const MPoly& b, const CycScalar& c) {
    if (c.is_zero()) return;
    for (const auto& [m1, c1] : a.terms_)
      for (const auto& [m2, c2] : b.terms_) add_term(merge(m1, m2), c1 * c2 * c);
  }

  // Value at a point given as id -> scalar; unmapped variables read as zero.
  CycScalar eval(const std::map<int, CycScalar>& point) const {
    CycScalar out(field_);
    for (const auto& [m, c] : terms_) {
      CycScalar v = c;
      bool dead = false;
      for (const auto& [id, e] : m) {
        auto it = point.find(id);
        if (it == point.end() || it->second.is_zero()) { dead = true; break; }
        v = v * it->second.pow(e);
      }
      if (!dead) out += v;
    }
    return out;
  }

  std::vector<int> variable_ids() const {
    std::vector<int> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [id, e] : m) out.push_back(id);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

private:
  static Mono merge(const Mono& a, const Mono& b) {
    Mono r;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
      else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
      else {
        r.emplace_back(a[i].first, a[i].second + b[j].second);
        ++i; ++j;
      }
    }
    return r;
  }

  FieldPtr field_;
  std::map<Mono, CycScalar> terms_;
};

}  // namespace gpi

#endif
