#include "gpi/structure.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gpi {
namespace {

// --- polynomial helpers over CycScalar (dense, constant term first) ---------

using CPoly = std::vector<CycScalar>;

int cdeg(const CPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[static_cast<size_t>(i)].is_zero()) return i;
  return -1;
}

void ctrim(CPoly& p) { p.resize(static_cast<size_t>(cdeg(p) + 1)); }

CPoly cmul(const CPoly& a, const CPoly& b, const FieldPtr& f) {
  if (a.empty() || b.empty()) return {};
  CPoly r(a.size() + b.size() - 1, CycScalar(f));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  ctrim(r);
  return r;
}

CPoly cdivmod(CPoly& a, const CPoly& b, const FieldPtr& f) {
  int db = cdeg(b);
  CPoly q;
  int da = cdeg(a);
  if (da < db) return q;
  q.assign(static_cast<size_t>(da - db + 1), CycScalar(f));
  while ((da = cdeg(a)) >= db && da >= 0) {
    CycScalar fac = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
    q[static_cast<size_t>(da - db)] = fac;
    for (int i = 0; i <= db; ++i)
      a[static_cast<size_t>(da - db + i)] =
          a[static_cast<size_t>(da - db + i)] - fac * b[static_cast<size_t>(i)];
  }
  ctrim(a);
  return q;
}

// s*a + t*b = gcd; only s is needed by the callers.
void cextgcd(CPoly a, CPoly b, const FieldPtr& f, CPoly& gcd, CPoly& s) {
  CPoly s0{CycScalar::one(f)}, s1{};
  while (cdeg(b) >= 0) {
    CPoly rem = a;
    CPoly q = cdivmod(rem, b, f);
    CPoly s2 = s0;
    CPoly qs = cmul(q, s1, f);
    if (s2.size() < qs.size()) s2.resize(qs.size(), CycScalar(f));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] = s2[i] - qs[i];
    ctrim(s2);
    a = std::move(b);
    b = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  gcd = std::move(a);
  s = std::move(s0);
}

using BigInt = boost::multiprecision::mpz_int;

std::vector<BigInt> divisors_of(const BigInt& n_in) {
  BigInt n = n_in < 0 ? BigInt(-n_in) : n_in;
  std::vector<BigInt> out;
  if (n == 0) return out;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r < 0) return false;
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  root = Rational(sn) / Rational(sd);
  return true;
}

}  // namespace

// --- roots -------------------------------------------------------------------

std::pair<std::vector<CycScalar>, bool> roots_in_field(std::vector<CycScalar> poly) {
  std::vector<CycScalar> roots;
  ctrim(poly);
  if (poly.empty()) fail("BadShape", "zero polynomial has no root set");
  FieldPtr f = poly[0].field();
  auto eval = [&](const CPoly& p, const CycScalar& x) {
    CycScalar acc(f);
    for (int i = cdeg(p); i >= 0; --i) acc = acc * x + p[static_cast<size_t>(i)];
    return acc;
  };
  auto deflate = [&](CPoly& p, const CycScalar& r) {
    CPoly lin{-r, CycScalar::one(f)};
    CPoly rem = p;
    p = cdivmod(rem, lin, f);
  };
  for (;;) {
    int d = cdeg(poly);
    if (d <= 0) return {roots, true};
    if (d == 1) {
      roots.push_back(-(poly[0] / poly[1]));
      return {roots, true};
    }
    // Rational roots, available when every coefficient is rational.
    bool all_rat = true;
    for (const auto& c : poly)
      if (!c.is_rational()) { all_rat = false; break; }
    bool found = false;
    if (all_rat) {
      if (poly[0].is_zero()) {
        roots.push_back(CycScalar(f));
        deflate(poly, CycScalar(f));
        continue;
      }
      BigInt denlcm = 1;
      for (const auto& c : poly)
        denlcm = boost::multiprecision::lcm(denlcm, boost::multiprecision::denominator(c.rational_value()));
      BigInt a0 = boost::multiprecision::numerator(poly[0].rational_value() * Rational(denlcm));
      BigInt an = boost::multiprecision::numerator(
          poly[static_cast<size_t>(d)].rational_value() * Rational(denlcm));
      for (const BigInt& p : divisors_of(a0)) {
        for (const BigInt& q : divisors_of(an)) {
          for (int sign : {1, -1}) {
            Rational cand = Rational(sign * p) / Rational(q);
            CycScalar x(f, cand);
            if (eval(poly, x).is_zero()) {
              roots.push_back(x);
              deflate(poly, x);
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (found) break;
      }
      if (found) continue;
    }
    if (d == 2) {
      // x = (-b +- s) / (2a) with s^2 = b^2 - 4ac; look for s = r * zeta^k.
      const CycScalar& a = poly[2];
      const CycScalar& b = poly[1];
      const CycScalar& c0 = poly[0];
      CycScalar disc = b * b - CycScalar(f, Rational(4)) * a * c0;
      int m = f->order();
      for (int k = 0; k < m; ++k) {
        CycScalar tw = CycScalar::zeta(f, -2 * k);
        CycScalar t = disc * tw;
        if (!t.is_rational()) continue;
        Rational rt;
        if (!rational_sqrt(t.rational_value(), rt)) continue;
        CycScalar s = CycScalar(f, rt) * CycScalar::zeta(f, k);
        CycScalar half = (CycScalar(f, Rational(2)) * a).inv();
        roots.push_back((-b + s) * half);
        roots.push_back((-b - s) * half);
        return {roots, true};
      }
      return {roots, false};
    }
    return {roots, false};
  }
}

// --- center / radical --------------------------------------------------------

CenterBases center(const AlgebraPtr& a) {
  int d = a->dim();
  const FieldPtr& f = a->field();
  // [z, b_j] = 0 for all j: rows (j,k), unknowns z_i.
  Mat m(d * d, d, f);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      for (const auto& t : a->mul_terms(i, j))
        m.at(j * d + t.k, i) += t.c;
      for (const auto& t : a->mul_terms(j, i)) {
        m.at(j * d + t.k, i) += -t.c;
      }
    }
  CenterBases out;
  for (auto& v : m.nullspace()) out.center.emplace_back(a, std::move(v));
  // Z(A)_e: same system plus coordinates outside A_e forced to zero.
  Mat me(d * d + d, d, f);
  for (int r = 0; r < d * d; ++r)
    for (int c = 0; c < d; ++c) me.at(r, c) = m.at(r, c);
  for (int i = 0; i < d; ++i)
    if (a->degree(i) != 0) me.at(d * d + i, i) = CycScalar::one(f);
  for (auto& v : me.nullspace()) out.center_e.emplace_back(a, std::move(v));
  return out;
}

std::vector<AlgElement> trace_radical(const AlgebraPtr& a) {
  int d = a->dim();
  const FieldPtr& f = a->field();
  // tr(L_i L_j) = sum_{p,k} c_{ip}^k c_{jk}^p with L_i[k][p] = c_{ip}^k.
  Mat gram(d, d, f);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      CycScalar acc(f);
      for (int p = 0; p < d; ++p)
        for (const auto& ti : a->mul_terms(i, p))       // k = ti.k
          for (const auto& tj : a->mul_terms(j, ti.k))  // back to p
            if (tj.k == p) acc.addmul(ti.c, tj.c);
      gram.at(i, j) = acc;
    }
  std::vector<AlgElement> out;
  for (auto& v : gram.nullspace()) out.emplace_back(a, std::move(v));
  return out;
}

// --- minimal polynomial ------------------------------------------------------

namespace {

std::vector<CycScalar> minimal_polynomial_rel(const AlgebraPtr& a, const AlgElement& x,
                                              const AlgElement& unit) {
  int d = a->dim();
  const FieldPtr& f = a->field();
  std::vector<AlgElement> powers{unit};
  for (;;) {
    AlgElement next = powers.back() * x;
    // Is next in the span of the powers so far?
    int k = static_cast<int>(powers.size());
    Mat m(d, k, f);
    for (int c = 0; c < k; ++c)
      for (int r = 0; r < d; ++r) m.at(r, c) = powers[static_cast<size_t>(c)].coord(r);
    std::vector<CycScalar> b;
    for (int r = 0; r < d; ++r) b.push_back(next.coord(r));
    if (auto sol = m.solve(b)) {
      std::vector<CycScalar> poly(static_cast<size_t>(k + 1), CycScalar(f));
      for (int i = 0; i < k; ++i) poly[static_cast<size_t>(i)] = -(*sol)[static_cast<size_t>(i)];
      poly[static_cast<size_t>(k)] = CycScalar::one(f);
      return poly;
    }
    powers.push_back(std::move(next));
    if (static_cast<int>(powers.size()) > d + 1)
      fail("Internal", "minimal polynomial search exceeded dimension");
  }
}

}  // namespace

std::vector<CycScalar> minimal_polynomial(const AlgebraPtr& a, const AlgElement& x) {
  return minimal_polynomial_rel(a, x, AlgElement::unit(a));
}

// --- central idempotents -----------------------------------------------------

namespace {

// Pairwise-coprime factorization by linear-factor extraction; the remainder,
// when quadratic with no root in the field, is kept as a single factor.
std::vector<CPoly> factor_for_splitting(const CPoly& p, const FieldPtr& f) {
  auto [roots, complete] = roots_in_field(p);
  // Collapse repeated roots; semisimple minimal polynomials are squarefree,
  // so repetition signals caller misuse rather than a legal input.
  std::vector<CPoly> factors;
  std::vector<CycScalar> distinct;
  for (const auto& r : roots) {
    bool dup = false;
    for (const auto& s : distinct)
      if (s == r) dup = true;
    if (!dup) distinct.push_back(r);
  }
  CPoly rem = p;
  for (const auto& r : distinct) {
    factors.push_back(CPoly{-r, CycScalar::one(f)});
    CPoly lin{-r, CycScalar::one(f)};
    CPoly tmp = rem;
    rem = cdivmod(tmp, lin, f);
  }
  int dr = cdeg(rem);
  if (dr >= 1) {
    if (dr <= 2 && !complete) {
      factors.push_back(rem);  // irreducible by the implemented tests
    } else if (dr >= 1 && complete) {
      factors.push_back(rem);  // all roots extracted as distinct; leftover squarefull
    } else {
      fail("FactorizationIncomplete",
           "a minimal polynomial of degree " + std::to_string(cdeg(p)) +
               " does not split by rational-root and quadratic tests; "
               "consider enlarging the cyclotomic order m");
    }
  }
  return factors;
}

AlgElement eval_poly_at(const AlgebraPtr& a, const CPoly& p, const AlgElement& x,
                        const AlgElement& unit) {
  AlgElement acc(a);
  for (int i = cdeg(p); i >= 0; --i) {
    acc = acc * x;
    acc.add_scaled(unit, p[static_cast<size_t>(i)]);
  }
  return acc;
}

}  // namespace

std::vector<CentralIdempotent> central_idempotents(const AlgebraPtr& a) {
  if (!a->is_unital()) fail("NotUnital", "central idempotents need a unital algebra");
  if (!trace_radical(a).empty())
    fail("NotSemisimple", "trace form is degenerate; algebra is not semisimple");
  const FieldPtr& f = a->field();
  CenterBases cb = center(a);
  std::vector<AlgElement> idems{AlgElement::unit(a)};
  for (const AlgElement& z : cb.center) {
    std::vector<AlgElement> next;
    for (const AlgElement& e : idems) {
      AlgElement w = z * e;
      CPoly mp = minimal_polynomial_rel(a, w, e);
      std::vector<CPoly> factors = factor_for_splitting(mp, f);
      if (factors.size() <= 1) {
        next.push_back(e);
        continue;
      }
      // CRT projectors: p_i = s_i(w) * (mp / f_i)(w), unit = e.
      for (const CPoly& fi : factors) {
        CPoly rest = mp;
        CPoly tmp = rest;
        rest = cdivmod(tmp, fi, f);
        CPoly gcd, s;
        cextgcd(rest, fi, f, gcd, s);
        if (cdeg(gcd) != 0)
          fail("FactorizationIncomplete", "repeated factor in a minimal polynomial");
        // normalize gcd to 1
        CycScalar lead = gcd[0].inv();
        for (auto& cc : s) cc = cc * lead;
        AlgElement proj = eval_poly_at(a, cmul(s, rest, f), w, e);
        if (!proj.is_zero()) next.push_back(proj);
      }
    }
    idems = std::move(next);
  }
  // mu_e against the unit's e-part.
  std::vector<CentralIdempotent> out;
  AlgElement ue = AlgElement::unit(a).component(0);
  for (AlgElement& e : idems) {
    CentralIdempotent ci{e, std::nullopt, false};
    AlgElement ee = e.component(0);
    ci.e_part_nonzero = !ee.is_zero();
    // proportional to the unit's e-part?
    CycScalar ratio(f);
    bool prop = !ue.is_zero();
    bool ratio_set = false;
    for (int i = 0; prop && i < a->dim(); ++i) {
      const CycScalar& u = ue.coord(i);
      const CycScalar& v = ee.coord(i);
      if (u.is_zero()) {
        if (!v.is_zero()) prop = false;
      } else {
        CycScalar r = v / u;
        if (!ratio_set) { ratio = r; ratio_set = true; }
        else if (r != ratio) prop = false;
      }
    }
    if (prop && ratio_set) ci.mu_e = ratio;
    out.push_back(std::move(ci));
  }
  return out;
}

// --- graded ideals / simplicity ----------------------------------------------

std::vector<Vec> graded_ideal_closure(const AlgebraPtr& a, const AlgElement& v) {
  const FieldPtr& f = a->field();
  std::vector<Vec> span;
  auto add = [&](const AlgElement& x) {
    if (x.is_zero()) return false;
    if (in_span(span, x.coords(), f)) return false;
    span.push_back(x.coords());
    span = rref_basis(span, f);
    return true;
  };
  for (const auto& [g, part] : v.components()) add(part);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> snapshot = span;
    for (const Vec& row : snapshot) {
      AlgElement x(a, row);
      for (int b = 0; b < a->dim(); ++b) {
        AlgElement bb = AlgElement::basis(a, b);
        for (const AlgElement& y : {bb * x, x * bb}) {
          for (const auto& [g, part] : y.components())
            if (add(part)) grew = true;
        }
      }
    }
  }
  return span;
}

namespace {

// Largest graded subspace contained in span(rows).
std::vector<Vec> graded_part(const AlgebraPtr& a, const std::vector<Vec>& rows) {
  const FieldPtr& f = a->field();
  std::vector<Vec> basis = rref_basis(rows, f);
  if (basis.empty()) return {};
  int k = static_cast<int>(basis.size());
  int d = a->dim();
  // Residual of a vector against the rref basis, as a linear map.
  auto residual = [&](Vec w) {
    for (const Vec& row : basis) {
      size_t lead = 0;
      while (lead < row.size() && row[lead].is_zero()) ++lead;
      if (lead == row.size() || w[lead].is_zero()) continue;
      CycScalar c = w[lead] / row[lead];
      for (size_t j = lead; j < w.size(); ++j) w[j] = w[j] - c * row[j];
    }
    return w;
  };
  int ng = a->group()->order();
  Mat m(ng * d, k, f);
  for (int c = 0; c < k; ++c) {
    AlgElement x(a, basis[static_cast<size_t>(c)]);
    for (int g = 0; g < ng; ++g) {
      Vec r = residual(x.component(g).coords());
      for (int i = 0; i < d; ++i) m.at(g * d + i, c) = r[static_cast<size_t>(i)];
    }
  }
  std::vector<Vec> out;
  for (const auto& coefvec : m.nullspace()) {
    Vec w(static_cast<size_t>(d), CycScalar(f));
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < d; ++i)
        w[static_cast<size_t>(i)] += coefvec[static_cast<size_t>(c)] * basis[static_cast<size_t>(c)][static_cast<size_t>(i)];
    out.push_back(std::move(w));
  }
  return rref_basis(out, f);
}

bool subspace_is_graded(const AlgebraPtr& a, const std::vector<Vec>& rows) {
  const FieldPtr& f = a->field();
  std::vector<Vec> basis = rref_basis(rows, f);
  for (const Vec& row : basis) {
    AlgElement x(a, row);
    for (const auto& [g, part] : x.components())
      if (!in_span(basis, part.coords(), f)) return false;
  }
  return true;
}

}  // namespace

SimplicityVerdict is_g_simple(const AlgebraPtr& a) {
  if (!a->is_unital()) fail("NotUnital", "is_g_simple needs a unital algebra");
  const FieldPtr& f = a->field();
  // A^2 != 0
  bool sq = false;
  for (int i = 0; i < a->dim() && !sq; ++i)
    for (int j = 0; j < a->dim() && !sq; ++j)
      if (!a->mul_terms(i, j).empty()) {
        for (const auto& t : a->mul_terms(i, j))
          if (!t.c.is_zero()) sq = true;
      }
  if (!sq) return {SimplicityVerdict::NotSimple, {}, "A^2 = 0"};
  std::vector<AlgElement> rad = trace_radical(a);
  if (!rad.empty()) {
    std::vector<Vec> rows;
    for (const auto& r : rad) rows.push_back(r.coords());
    std::vector<Vec> gp = graded_part(a, rows);
    if (!gp.empty()) return {SimplicityVerdict::NotSimple, gp, ""};
    return {SimplicityVerdict::Inconclusive, {}, "radical nonzero but its graded part vanished"};
  }
  std::vector<CentralIdempotent> idems;
  try {
    idems = central_idempotents(a);
  } catch (const Error& e) {
    if (e.code() == "FactorizationIncomplete")
      return {SimplicityVerdict::Inconclusive, {}, e.what()};
    throw;
  }
  size_t r = idems.size();
  if (r <= 1) return {SimplicityVerdict::Simple, {}, ""};
  // Component ideals e_i A.
  std::vector<std::vector<Vec>> comps;
  for (const auto& ci : idems) {
    std::vector<Vec> rows;
    for (int b = 0; b < a->dim(); ++b) rows.push_back((ci.elem * AlgElement::basis(a, b)).coords());
    comps.push_back(rref_basis(rows, f));
  }
  for (size_t mask = 1; mask + 1 < (size_t{1} << r); ++mask) {
    std::vector<Vec> rows;
    for (size_t i = 0; i < r; ++i)
      if (mask & (size_t{1} << i))
        for (const Vec& v : comps[i]) rows.push_back(v);
    if (subspace_is_graded(a, rows))
      return {SimplicityVerdict::NotSimple, rref_basis(rows, f), ""};
  }
  return {SimplicityVerdict::Simple, {}, ""};
}

// --- division ----------------------------------------------------------------

namespace {

bool is_invertible(const AlgebraPtr& a, const AlgElement& x) {
  int d = a->dim();
  Mat lx(d, d, a->field());
  for (int j = 0; j < d; ++j) {
    if (x.coord(j).is_zero()) continue;
    for (int b = 0; b < d; ++b)
      for (const auto& t : a->mul_terms(j, b)) lx.at(t.k, b).addmul(x.coord(j), t.c);
  }
  return lx.rank() == d;
}

}  // namespace

DivisionStructureReport is_g_division(const AlgebraPtr& a) {
  if (!a->is_unital()) fail("NotUnital", "is_g_division needs a unital algebra");
  DivisionStructureReport rep{DivisionStructureReport::Division, {}, {}, std::nullopt};
  bool all_small = true;
  for (int g = 0; g < a->group()->order(); ++g)
    if (a->component(g).size() > 1) all_small = false;
  if (all_small) {
    for (int g : a->support()) {
      AlgElement b = AlgElement::basis(a, a->component(g)[0]);
      if (!is_invertible(a, b)) {
        rep.verdict = DivisionStructureReport::NotDivision;
        rep.failing = b;
        return rep;
      }
      rep.support.push_back(g);
      rep.witnesses.push_back(b);
    }
    return rep;
  }
  // Sampled falsification over basis elements and small pair combinations.
  for (int i = 0; i < a->dim(); ++i) {
    AlgElement b = AlgElement::basis(a, i);
    if (!is_invertible(a, b)) {
      rep.verdict = DivisionStructureReport::NotDivision;
      rep.failing = b;
      return rep;
    }
  }
  for (int g : a->support()) {
    const auto& comp = a->component(g);
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = i + 1; j < comp.size(); ++j)
        for (int s : {1, -1}) {
          AlgElement x = AlgElement::basis(a, comp[i]) +
                         AlgElement::basis(a, comp[j]).scaled(CycScalar(a->field(), Rational(s)));
          if (!is_invertible(a, x)) {
            rep.verdict = DivisionStructureReport::NotDivision;
            rep.failing = x;
            return rep;
          }
        }
  }
  rep.verdict = DivisionStructureReport::Inconclusive;
  return rep;
}

// --- exponent ----------------------------------------------------------------

namespace {

struct Component {
  std::vector<Vec> basis;  // coordinates in A
  AlgElement unit;         // the central idempotent

  explicit Component(AlgElement u) : unit(std::move(u)) {}
};

int component_center_dim(const AlgebraPtr& a, const Component& comp) {
  const FieldPtr& f = a->field();
  int k = static_cast<int>(comp.basis.size());
  int d = a->dim();
  // z = sum c_i v_i with [z, v_j] = 0 for all j.
  Mat m(k * d, k, f);
  for (int i = 0; i < k; ++i) {
    AlgElement vi(a, comp.basis[static_cast<size_t>(i)]);
    for (int j = 0; j < k; ++j) {
      AlgElement vj(a, comp.basis[static_cast<size_t>(j)]);
      AlgElement comm = vi * vj - vj * vi;
      for (int r = 0; r < d; ++r) m.at(j * d + r, i) = comm.coord(r);
    }
  }
  return k - m.rank();
}

int subspace_dim_of_products(const AlgebraPtr& a, const AlgElement& p, const Component& comp) {
  std::vector<Vec> rows;
  for (const Vec& v : comp.basis) rows.push_back((p * AlgElement(a, v) * p).coords());
  return span_dim(rows, a->field());
}

bool component_is_split(const AlgebraPtr& a, const Component& comp, int center_dim, int n) {
  if (n == 1) return true;
  const FieldPtr& f = a->field();
  // Look for a rank-one idempotent among spectral projectors of the
  // component's basis vectors.
  for (const Vec& v : comp.basis) {
    AlgElement x(a, v);
    x = comp.unit * x * comp.unit;
    CPoly mp;
    try {
      mp = minimal_polynomial_rel(a, x, comp.unit);
    } catch (const Error&) {
      continue;
    }
    auto [roots, complete] = roots_in_field(mp);
    if (!complete || roots.size() < 2) continue;
    std::vector<CycScalar> distinct;
    for (const auto& r : roots) {
      bool dup = false;
      for (const auto& s : distinct)
        if (s == r) dup = true;
      if (!dup) distinct.push_back(r);
    }
    if (distinct.size() != roots.size()) continue;  // not semisimple action
    for (const CycScalar& lam : distinct) {
      AlgElement proj = comp.unit;
      for (const CycScalar& mu : distinct) {
        if (mu == lam) continue;
        AlgElement factor = x - comp.unit.scaled(mu);
        proj = proj * factor.scaled((lam - mu).inv());
      }
      if (proj.is_zero()) continue;
      if (subspace_dim_of_products(a, proj, comp) == center_dim) return true;
    }
  }
  return false;
}

}  // namespace

int exponent(const AlgebraPtr& a) {
  std::vector<CentralIdempotent> idems = central_idempotents(a);  // NotSemisimple inside
  const FieldPtr& f = a->field();
  int best = 0;
  for (const auto& ci : idems) {
    Component comp(ci.elem);
    std::vector<Vec> rows;
    for (int b = 0; b < a->dim(); ++b) rows.push_back((ci.elem * AlgElement::basis(a, b)).coords());
    comp.basis = rref_basis(rows, f);
    int k = static_cast<int>(comp.basis.size());
    int c = component_center_dim(a, comp);
    if (c == 0 || k % c != 0)
      fail("NotSplit", "component dimension is not a multiple of its center's");
    int over_center = k / c;
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(over_center))));
    if (n * n != over_center)
      fail("NotSplit", "component dimension over its center is not a perfect square");
    if (!component_is_split(a, comp, c, n))
      fail("NotSplit", "no rank-one idempotent found; component may be a nonsplit division algebra at this scalar order");
    best = std::max(best, over_center);
  }
  return best;
}

KaplanskyReport kaplansky_report(const AlgebraPtr& a) {
  const auto& tm = a->twisted_matrix_form();
  if (!tm) fail("NotTwistedMatrixForm", "kaplansky report needs the retained factorized form");
  int n = static_cast<int>(tm->gtuple.size());
  int exp = exponent(a);
  int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(exp))));
  KaplanskyReport rep{n, 2 * root, n <= root};
  return rep;
}

}  // namespace gpi
