#include "gpi/checker.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <random>
#include <thread>

#include "gpi/structure.hpp"

namespace gpi {

namespace {

// Mixed-radix odometer; returns false once every digit has wrapped.
bool next_odometer(std::vector<int>& od, const std::vector<int>& radix) {
  for (size_t p = 0; p < od.size(); ++p) {
    if (++od[p] < radix[p]) return true;
    od[p] = 0;
  }
  return false;
}

AlgElement eval_monomial(const GMonomial& m, const AlgebraPtr& a,
                         const std::map<GVar, AlgElement>& values) {
  AlgElement cur = AlgElement::unit(a);  // only used when m is empty and A unital
  bool started = false;
  for (const GVar& v : m) {
    auto it = values.find(v);
    if (it == values.end())
      fail("MissingAssignment", "no value for x[" + std::to_string(v.first) + "," +
                                    a->group()->element_name(v.second) + "]");
    if (!started) {
      cur = it->second;
      started = true;
    } else {
      cur = cur * it->second;
    }
    if (cur.is_zero()) return cur;
  }
  if (!started && !a->is_unital())
    fail("MissingAssignment", "constant monomial on a non-unital algebra");
  return cur;
}

}  // namespace

const AlgElement& Assignment::at(const GVar& v) const {
  auto it = values.find(v);
  if (it == values.end())
    fail("MissingAssignment",
         "no value for variable index " + std::to_string(v.first));
  return it->second;
}

AlgElement evaluate(const GradedPolynomial& f, const AlgebraPtr& a, const Assignment& asg) {
  for (const auto& [var, val] : asg.values) {
    if (val.algebra() != a) fail("OrderMismatch", "assignment value from another algebra");
    if (!(val.component(var.second) == val))
      fail("InhomogeneousValue", "value for x[" + std::to_string(var.first) + "," +
                                     a->group()->element_name(var.second) +
                                     "] is not homogeneous of that degree");
  }
  AlgElement acc(a);
  for (const auto& [m, c] : f.terms()) {
    AlgElement v = eval_monomial(m, a, asg.values);
    acc.add_scaled(v, c);
  }
  return acc;
}

bool GenericElement::is_zero() const {
  for (const MPoly& p : coords)
    if (!p.is_zero()) return false;
  return true;
}

GenericElement evaluate_generic(const GradedPolynomial& f, const AlgebraPtr& a) {
  const FieldPtr& fld = a->field();
  GenericElement out{a, std::vector<MPoly>(static_cast<size_t>(a->dim()), MPoly(fld)), {}, {}};
  // One generic element per distinct variable; ids are contiguous.
  std::map<GVar, std::vector<MPoly>> generic;
  int next_id = 0;
  for (const GVar& v : f.variables()) {
    const std::vector<int>& comp = a->component(v.second);
    if (comp.empty())
      fail("EmptyComponent", "component " + a->group()->element_name(v.second) +
                                 " is zero; the evaluation is vacuously zero");
    std::vector<MPoly> coords(static_cast<size_t>(a->dim()), MPoly(fld));
    for (int b : comp) {
      coords[static_cast<size_t>(b)] = MPoly::var(next_id, fld);
      out.var_of_id[next_id] = v;
      out.basis_of_id[next_id] = b;
      ++next_id;
    }
    generic.emplace(v, std::move(coords));
  }

  auto mul = [&](const std::vector<MPoly>& x, const std::vector<MPoly>& y) {
    std::vector<MPoly> r(static_cast<size_t>(a->dim()), MPoly(fld));
    for (int i = 0; i < a->dim(); ++i) {
      if (x[static_cast<size_t>(i)].is_zero()) continue;
      for (int j = 0; j < a->dim(); ++j) {
        if (y[static_cast<size_t>(j)].is_zero()) continue;
        for (const SCTerm& t : a->mul_terms(i, j))
          r[static_cast<size_t>(t.k)].addmul(x[static_cast<size_t>(i)],
                                             y[static_cast<size_t>(j)], t.c);
      }
    }
    return r;
  };

  for (const auto& [m, c] : f.terms()) {
    if (m.empty()) {
      if (!a->is_unital()) fail("MissingAssignment", "constant monomial on a non-unital algebra");
      const std::vector<CycScalar>& u = a->unit_coords();
      for (int k = 0; k < a->dim(); ++k)
        out.coords[static_cast<size_t>(k)].add_term({}, c * u[static_cast<size_t>(k)]);
      continue;
    }
    std::vector<MPoly> cur = generic.at(m[0]);
    for (size_t p = 1; p < m.size(); ++p) cur = mul(cur, generic.at(m[p]));
    for (int k = 0; k < a->dim(); ++k) {
      for (const auto& [mono, cc] : cur[static_cast<size_t>(k)].terms())
        out.coords[static_cast<size_t>(k)].add_term(mono, cc * c);
    }
  }
  return out;
}

namespace {

// Drop monomials touching a variable whose component is zero; those vanish
// under every graded substitution.
GradedPolynomial prune_empty_components(const GradedPolynomial& f, const AlgebraPtr& a) {
  GradedPolynomial r(f.group(), f.field());
  for (const auto& [m, c] : f.terms()) {
    bool dead = false;
    for (const GVar& v : m)
      if (a->component(v.second).empty()) { dead = true; break; }
    if (!dead) r.add_term(m, c);
  }
  return r;
}

// Witness for a nonzero generic value: a small-integer point where some
// coordinate polynomial is nonzero, folded back into concrete elements.
Assignment witness_from_generic(const GenericElement& ge, const AlgebraPtr& a) {
  const MPoly* p = nullptr;
  for (const MPoly& q : ge.coords)
    if (!q.is_zero()) { p = &q; break; }
  if (!p) fail("SearchExhausted", "generic value is zero; no witness exists");
  std::vector<int> ids;
  for (const auto& [id, var] : ge.var_of_id) ids.push_back(id);
  const FieldPtr& fld = a->field();
  for (int range = 2; range <= 8; range *= 2) {
    std::vector<int> od(ids.size(), 0);
    std::vector<int> radix(ids.size(), range);
    do {
      std::map<int, CycScalar> point;
      for (size_t i = 0; i < ids.size(); ++i)
        point[ids[i]] = CycScalar(fld, Rational(od[i]));
      if (!p->eval(point).is_zero()) {
        Assignment asg;
        for (const auto& [id, var] : ge.var_of_id) {
          auto it = asg.values.find(var);
          if (it == asg.values.end())
            it = asg.values.emplace(var, AlgElement(a)).first;
          it->second.add_scaled(AlgElement::basis(a, ge.basis_of_id.at(id)), point.at(id));
        }
        return asg;
      }
    } while (next_odometer(od, radix));
  }
  fail("SearchExhausted", "no small-integer witness point found");
}

}  // namespace

IdentityReport is_identity(const GradedPolynomial& f, const AlgebraPtr& a,
                           long long tuple_cap) {
  if (!a->group()->same_as(*f.group()))
    fail("GroupMismatch", "polynomial and algebra are graded by different groups");
  GradedPolynomial g = prune_empty_components(f, a);
  if (g.is_zero()) return {true, std::nullopt, 0};

  if (is_multilinear(g)) {
    std::vector<GVar> vars = g.variables();
    std::vector<int> radix;
    long long total = 1;
    for (const GVar& v : vars) {
      int sz = static_cast<int>(a->component(v.second).size());
      radix.push_back(sz);
      total *= sz;
      if (total > tuple_cap)
        fail("ResourceBound", "basis sweep needs more than " +
                                  std::to_string(tuple_cap) + " tuples");
    }
    std::vector<int> od(vars.size(), 0);
    long long checked = 0;
    do {
      Assignment asg;
      for (size_t i = 0; i < vars.size(); ++i)
        asg.values.emplace(vars[i],
                           AlgElement::basis(a, a->component(vars[i].second)[static_cast<size_t>(od[i])]));
      ++checked;
      if (!evaluate(g, a, asg).is_zero()) return {false, asg, checked};
    } while (next_odometer(od, radix));
    return {true, std::nullopt, checked};
  }

  GenericElement ge = evaluate_generic(g, a);
  if (ge.is_zero()) return {true, std::nullopt, 1};
  return {false, witness_from_generic(ge, a), 1};
}

CentralityVerdict is_central(const GradedPolynomial& f, const AlgebraPtr& a,
                             long long tuple_cap) {
  // Multilinear route: one sweep decides everything, since the values on
  // basis tuples span all values and centrality is closed under spans.
  GradedPolynomial g = prune_empty_components(f, a);
  if (!g.is_zero() && is_multilinear(g)) {
    std::vector<GVar> vars = g.variables();
    std::vector<int> radix;
    long long total = 1;
    for (const GVar& v : vars) {
      radix.push_back(static_cast<int>(a->component(v.second).size()));
      total *= radix.back();
      if (total > tuple_cap)
        fail("ResourceBound", "basis sweep needs more than " +
                                  std::to_string(tuple_cap) + " tuples");
    }
    std::vector<int> od(vars.size(), 0);
    std::optional<Assignment> nonzero_witness;
    do {
      Assignment asg;
      for (size_t i = 0; i < vars.size(); ++i)
        asg.values.emplace(vars[i], AlgElement::basis(
            a, a->component(vars[i].second)[static_cast<size_t>(od[i])]));
      AlgElement v = evaluate(g, a, asg);
      if (v.is_zero()) continue;
      if (!nonzero_witness) nonzero_witness = asg;
      for (int b = 0; b < a->dim(); ++b) {
        AlgElement eb = AlgElement::basis(a, b);
        if (!(v * eb == eb * v)) return {CentralityVerdict::Neither, asg, b};
      }
    } while (next_odometer(od, radix));
    if (!nonzero_witness) return {CentralityVerdict::Identity, std::nullopt, std::nullopt};
    return {CentralityVerdict::Central, nonzero_witness, std::nullopt};
  }

  IdentityReport idr = is_identity(f, a, tuple_cap);
  if (idr.identity) return {CentralityVerdict::Identity, std::nullopt, std::nullopt};

  int fresh = 1;
  for (int i : f.variable_indices()) fresh = std::max(fresh, i + 1);
  for (int g : a->support()) {
    GradedPolynomial x(f.group(), f.field());
    x.add_term({{fresh, g}}, CycScalar::one(f.field()));
    GradedPolynomial comm = f * x - x * f;
    IdentityReport c = is_identity(comm, a, tuple_cap);
    if (!c.identity) {
      std::optional<int> basis_idx;
      const AlgElement& xv = c.witness->at({fresh, g});
      for (int b = 0; b < a->dim(); ++b)
        if (xv == AlgElement::basis(a, b)) { basis_idx = b; break; }
      return {CentralityVerdict::Neither, c.witness, basis_idx};
    }
  }
  return {CentralityVerdict::Central, idr.witness, std::nullopt};
}

RhoClass rho_dichotomy(const GradedPolynomial& f, const AlgebraPtr& a) {
  CentralityVerdict cv = is_central(f, a);
  if (cv.kind != CentralityVerdict::Central)
    fail("PreconditionFailed", "rho_dichotomy needs a central polynomial");
  GradedPolynomial rf = project(f, 0);
  CentralityVerdict rc = is_central(rf, a);
  if (rc.kind == CentralityVerdict::Identity) return RhoClass::Identity;
  if (rc.kind == CentralityVerdict::Central) return RhoClass::Central;
  fail("DichotomyViolated",
       "identity-degree part of a central polynomial is neither central nor an identity");
}

AlgElement regev_evaluate(int n, const std::vector<AlgElement>& xs,
                          const std::vector<AlgElement>& ys) {
  int d = n * n;
  if (static_cast<int>(xs.size()) != d || static_cast<int>(ys.size()) != d)
    fail("BadShape", "staircase evaluation needs n^2 values on each side");
  AlgebraPtr a = xs[0].algebra();
  const FieldPtr& fld = a->field();
  const CycScalar plus = CycScalar::one(fld);
  const CycScalar minus = CycScalar(fld, Rational(-1));

  std::vector<bool> slot_is_x;
  for (const auto& [isx, size] : regev_blocks(n))
    for (int s = 0; s < size; ++s) slot_is_x.push_back(isx);

  // Partial products keyed by the sets of x/y indices consumed so far; the
  // sign of each placement is the parity of inversions it creates.
  std::map<std::pair<unsigned, unsigned>, AlgElement> cur;
  bool first = true;
  for (bool isx : slot_is_x) {
    std::map<std::pair<unsigned, unsigned>, AlgElement> next;
    const std::vector<AlgElement>& vals = isx ? xs : ys;
    auto step = [&](std::pair<unsigned, unsigned> key, const AlgElement* pp) {
      unsigned mask = isx ? key.first : key.second;
      for (int v = 0; v < d; ++v) {
        if (mask & (1u << v)) continue;
        int greater = std::popcount(mask >> (v + 1));
        const CycScalar& sgn = (greater % 2) ? minus : plus;
        auto nk = key;
        (isx ? nk.first : nk.second) |= (1u << v);
        auto it = next.find(nk);
        if (it == next.end()) it = next.emplace(nk, AlgElement(a)).first;
        if (pp) it->second.add_scaled_product(*pp, vals[static_cast<size_t>(v)], sgn);
        else it->second.add_scaled(vals[static_cast<size_t>(v)], sgn);
      }
    };
    if (first) {
      step({0u, 0u}, nullptr);
      first = false;
    } else {
      for (const auto& [key, pp] : cur) {
        if (pp.is_zero()) continue;
        step(key, &pp);
      }
    }
    cur = std::move(next);
  }
  unsigned full = (d == 32) ? ~0u : ((1u << d) - 1);
  auto it = cur.find({full, full});
  if (it == cur.end()) return AlgElement(a);
  return it->second;
}

namespace {

AlgElement poly_eval(const Poly& f, const AlgebraPtr& a,
                     const std::vector<AlgElement>& vals /* 1-based: vals[i-1] */) {
  AlgElement acc(a);
  for (const auto& [m, c] : f.terms()) {
    if (m.empty()) {
      acc.add_scaled(AlgElement::unit(a), c);
      continue;
    }
    AlgElement cur = vals[static_cast<size_t>(m[0] - 1)];
    for (size_t p = 1; p < m.size() && !cur.is_zero(); ++p)
      cur = cur * vals[static_cast<size_t>(m[p] - 1)];
    if (!cur.is_zero()) acc.add_scaled(cur, c);
  }
  return acc;
}

bool commutes_with_all(const AlgElement& v, const AlgebraPtr& a) {
  for (int b = 0; b < a->dim(); ++b) {
    AlgElement e = AlgElement::basis(a, b);
    if (!(v * e == e * v)) return false;
  }
  return true;
}

}  // namespace

int worker_count() {
  if (const char* s = std::getenv("GRADEDPI_THREADS")) {
    int n = std::atoi(s);
    if (n >= 1) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

StrongReport strong_falsifier(const Poly& f, const AlgebraPtr& a, long long budget,
                              std::uint64_t seed, int regev_hint) {
  if (!is_multilinear(f))
    fail("PreconditionFailed", "the falsifier handles multilinear polynomials only");
  std::vector<int> vars = f.variable_indices();
  int l = static_cast<int>(vars.size());
  for (int i = 0; i < l; ++i)
    if (vars[static_cast<size_t>(i)] != i + 1)
      fail("BadShape", "variables must be x1..xl without gaps");
  if (regev_hint > 0 && l != 2 * regev_hint * regev_hint)
    fail("BadShape", "staircase hint does not match the variable count");

  std::vector<int> supp = a->support();
  int S = static_cast<int>(supp.size());
  StrongReport rep{false, 0, seed, {}, {}};
  if (S == 0 || budget <= 0) return rep;

  long long ndeg = 1;
  for (int i = 0; i < l; ++i) ndeg *= S;

  struct Violation {
    long long order;
    std::vector<int> degrees;
    std::vector<AlgElement> values;
  };

  std::atomic<long long> budget_left{budget};
  std::atomic<bool> stop{false};
  int nw = std::min<long long>(worker_count(), ndeg);
  std::vector<std::optional<Violation>> found(static_cast<size_t>(nw));
  std::vector<long long> counts(static_cast<size_t>(nw), 0);
  std::vector<std::string> errors(static_cast<size_t>(nw));
  std::atomic<bool> any_nonzero{false};
  std::atomic<bool> completed{true};

  auto eval_tuple = [&](const std::vector<AlgElement>& vals) {
    if (regev_hint > 0) {
      int d = regev_hint * regev_hint;
      std::vector<AlgElement> xs(vals.begin(), vals.begin() + d);
      std::vector<AlgElement> ys(vals.begin() + d, vals.end());
      return regev_evaluate(regev_hint, xs, ys);
    }
    return poly_eval(f, a, vals);
  };

  auto work = [&](int w) {
    try {
      for (long long di = w; di < ndeg && !stop.load(); di += nw) {
        std::vector<int> degs(static_cast<size_t>(l));
        long long t = di;
        for (int i = 0; i < l; ++i) {
          degs[static_cast<size_t>(i)] = supp[static_cast<size_t>(t % S)];
          t /= S;
        }
        std::vector<int> radix(static_cast<size_t>(l));
        bool empty = false;
        for (int i = 0; i < l; ++i) {
          radix[static_cast<size_t>(i)] =
              static_cast<int>(a->component(degs[static_cast<size_t>(i)]).size());
          if (radix[static_cast<size_t>(i)] == 0) empty = true;
        }
        if (empty) continue;
        std::vector<int> od(static_cast<size_t>(l), 0);
        do {
          if (budget_left.fetch_sub(1) <= 0) {
            completed.store(false);
            stop.store(true);
            break;
          }
          std::vector<AlgElement> vals;
          vals.reserve(static_cast<size_t>(l));
          for (int i = 0; i < l; ++i)
            vals.push_back(AlgElement::basis(
                a, a->component(degs[static_cast<size_t>(i)])[static_cast<size_t>(od[i])]));
          ++counts[static_cast<size_t>(w)];
          AlgElement v = eval_tuple(vals);
          if (v.is_zero()) continue;
          any_nonzero.store(true);
          if (!commutes_with_all(v, a))
            fail("PreconditionFailed", "polynomial is not central: a basis evaluation "
                                       "fails to commute with the algebra");
          if (v.component(0).is_zero()) {
            auto& slot = found[static_cast<size_t>(w)];
            if (!slot || di < slot->order) slot = Violation{di, degs, vals};
            stop.store(true);
            break;
          }
        } while (next_odometer(od, radix));
      }
    } catch (const Error& e) {
      errors[static_cast<size_t>(w)] = std::string(e.code()) + ": " + e.what();
      stop.store(true);
    }
  };

  if (nw == 1) {
    work(0);
  } else {
    std::vector<std::thread> ths;
    for (int w = 0; w < nw; ++w) ths.emplace_back(work, w);
    for (auto& t : ths) t.join();
  }
  for (const std::string& e : errors)
    if (!e.empty()) throw Error("PreconditionFailed", e);
  for (long long c : counts) rep.checked += c;

  std::optional<Violation> best;
  for (auto& v : found)
    if (v && (!best || v->order < best->order)) best = v;
  if (best) {
    rep.counterexample = true;
    rep.degrees = best->degrees;
    rep.values = best->values;
    return rep;
  }
  if (completed.load() && !any_nonzero.load())
    fail("PreconditionFailed", "polynomial is a graded identity here; centrality fails");

  // Pseudorandom homogeneous combinations with small integer coefficients.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> pick(0, S - 1);
  while (rep.checked < budget) {
    std::vector<int> degs(static_cast<size_t>(l));
    std::vector<AlgElement> vals;
    bool empty = false;
    for (int i = 0; i < l; ++i) {
      degs[static_cast<size_t>(i)] = supp[static_cast<size_t>(pick(rng))];
      const std::vector<int>& comp = a->component(degs[static_cast<size_t>(i)]);
      if (comp.empty()) { empty = true; break; }
      AlgElement v(a);
      for (int b : comp)
        v.add_scaled(AlgElement::basis(a, b), CycScalar(a->field(), Rational(coef(rng))));
      vals.push_back(std::move(v));
    }
    if (empty) continue;
    ++rep.checked;
    AlgElement v = eval_tuple(vals);
    if (v.is_zero()) continue;
    if (v.component(0).is_zero()) {
      rep.counterexample = true;
      rep.degrees = degs;
      rep.values = vals;
      return rep;
    }
  }
  return rep;
}

StrongReport star_product_falsifier(int n, const AlgebraPtr& a) {
  if (!a->twisted_matrix_form())
    fail("NotTwistedMatrixForm", "star substitution needs a twisted-matrix form");
  int d = n * n;
  std::vector<int> supp = a->support();
  int S = static_cast<int>(supp.size());
  StrongReport rep{false, 0, 0, {}, {}};
  if (S == 0) return rep;

  // The product with the transposed polynomial at starred inputs collapses
  // to v * star(v) for v = L_{n^2}(a_1..a_2d): star is an anti-automorphism
  // and the coefficients are rational, so only the 2d inputs of L are free.
  int l = 2 * d;
  long long ndeg = 1;
  for (int i = 0; i < l; ++i) ndeg *= S;
  for (long long di = 0; di < ndeg; ++di) {
    std::vector<int> degs(static_cast<size_t>(l));
    long long t = di;
    for (int i = 0; i < l; ++i) {
      degs[static_cast<size_t>(i)] = supp[static_cast<size_t>(t % S)];
      t /= S;
    }
    std::vector<int> radix(static_cast<size_t>(l));
    bool empty = false;
    for (int i = 0; i < l; ++i) {
      radix[static_cast<size_t>(i)] =
          static_cast<int>(a->component(degs[static_cast<size_t>(i)]).size());
      if (radix[static_cast<size_t>(i)] == 0) empty = true;
    }
    if (empty) continue;
    std::vector<int> od(static_cast<size_t>(l), 0);
    do {
      std::vector<AlgElement> vals;
      vals.reserve(static_cast<size_t>(l));
      for (int i = 0; i < l; ++i)
        vals.push_back(AlgElement::basis(
            a, a->component(degs[static_cast<size_t>(i)])[static_cast<size_t>(od[i])]));
      ++rep.checked;
      std::vector<AlgElement> xs(vals.begin(), vals.begin() + d);
      std::vector<AlgElement> ys(vals.begin() + d, vals.end());
      AlgElement v = regev_evaluate(n, xs, ys);
      if (v.is_zero()) continue;
      AlgElement w = v * star_involution(v);
      if (w.is_zero()) continue;
      if (w.component(0).is_zero()) {
        rep.counterexample = true;
        rep.degrees = degs;
        rep.values = vals;
        return rep;
      }
    } while (next_odometer(od, radix));
  }
  return rep;
}

SharpnessReport is_sharp(const GradedPolynomial& f,
                         const std::vector<std::pair<AlgebraPtr, int>>& family) {
  SharpnessReport rep{0, true, {}};
  for (const auto& [a, e] : family) rep.d = std::max(rep.d, e);
  for (const auto& [a, e] : family) {
    IdentityReport idr = is_identity(f, a);
    bool pass = (e == rep.d) ? !idr.identity : idr.identity;
    rep.rows.push_back({a->group()->name() + "/" + std::to_string(a->dim()) + "d", e,
                        idr.identity, pass});
    if (!pass) rep.sharp = false;
  }
  return rep;
}

namespace {

bool in_center_e(const AlgElement& v, const AlgebraPtr& a,
                 const std::vector<Vec>& center_e_rref) {
  if (v.is_zero()) return true;
  if (!(v.component(0) == v)) return false;
  return in_span(center_e_rref, v.coords(), a->field());
}

int isqrt_exact(int n) {
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return (r * r == n) ? r : -1;
}

bool group_abelian(const GroupPtr& g) {
  for (int x = 0; x < g->order(); ++x)
    for (int y = x + 1; y < g->order(); ++y)
      if (g->mul(x, y) != g->mul(y, x)) return false;
  return true;
}

}  // namespace

ECentralResult find_e_central(const AlgebraPtr& a, long long budget) {
  if (!trace_radical(a).empty())
    fail("NotSemisimple", "the degree-e central search needs a semisimple algebra");
  int exp = exponent(a);
  int n = isqrt_exact(exp);
  if (n < 0)
    fail("SearchExhausted", "exponent " + std::to_string(exp) + " is not a square");
  int d = n * n;
  if (d > 16) fail("ResourceBound", "index masks support n^2 <= 16");

  const GroupPtr& grp = a->group();
  std::vector<int> supp = a->support();
  int S = static_cast<int>(supp.size());
  bool abelian = group_abelian(grp);

  std::vector<Vec> center_e_rref;
  {
    CenterBases cb = center(a);
    std::vector<Vec> raw;
    for (const AlgElement& z : cb.center_e) raw.push_back(z.coords());
    center_e_rref = rref_basis(raw, a->field());
  }

  long long spent = 0;

  auto try_tuple = [&](const std::vector<int>& degs) -> std::optional<ECentralResult> {
    // Skip tuples that cannot reach degree e: over an abelian group every
    // monomial has the same degree, the product of all entries.
    if (abelian) {
      int prod = 0;
      for (int g : degs) prod = grp->mul(prod, g);
      if (prod != 0) return std::nullopt;
    }
    std::vector<int> radix(static_cast<size_t>(2 * d));
    for (int i = 0; i < 2 * d; ++i) {
      radix[static_cast<size_t>(i)] =
          static_cast<int>(a->component(degs[static_cast<size_t>(i)]).size());
      if (radix[static_cast<size_t>(i)] == 0) return std::nullopt;
    }
    std::vector<int> od(static_cast<size_t>(2 * d), 0);
    do {
      if (++spent > budget) fail("ResourceBound", "degree-e central search budget exhausted");
      std::vector<AlgElement> xs, ys;
      for (int i = 0; i < d; ++i)
        xs.push_back(AlgElement::basis(
            a, a->component(degs[static_cast<size_t>(i)])[static_cast<size_t>(od[i])]));
      for (int i = d; i < 2 * d; ++i)
        ys.push_back(AlgElement::basis(
            a, a->component(degs[static_cast<size_t>(i)])[static_cast<size_t>(od[i])]));
      AlgElement v = regev_evaluate(n, xs, ys);
      AlgElement fv = v.component(0);
      if (fv.is_zero()) continue;
      if (!in_center_e(fv, a, center_e_rref)) continue;

      ECentralResult res{n, degs, Assignment{}, fv, std::nullopt};
      for (int i = 0; i < 2 * d; ++i) {
        const AlgElement& val = (i < d) ? xs[static_cast<size_t>(i)] : ys[static_cast<size_t>(i - d)];
        res.witness.values.emplace(GVar{i + 1, degs[static_cast<size_t>(i)]}, val);
      }

      if (n <= 2) {
        Poly F = regev(n, a->field());
        GradedPolynomial FG = with_degrees(F, degs, grp);
        GradedPolynomial fp = project(FG, 0);
        CentralityVerdict cv = is_central(fp, a);
        if (cv.kind != CentralityVerdict::Central) continue;
        // Every swept value of the projected polynomial must land in Z(A)_e.
        std::vector<GVar> vars = fp.variables();
        std::vector<int> vr, vo(vars.size(), 0);
        for (const GVar& w : vars)
          vr.push_back(static_cast<int>(a->component(w.second).size()));
        bool all_ze = true;
        do {
          Assignment asg;
          for (size_t i = 0; i < vars.size(); ++i)
            asg.values.emplace(vars[i], AlgElement::basis(
                a, a->component(vars[i].second)[static_cast<size_t>(vo[i])]));
          if (!in_center_e(evaluate(fp, a, asg), a, center_e_rref)) { all_ze = false; break; }
        } while (next_odometer(vo, vr));
        if (!all_ze) continue;
        res.poly = fp;
      } else {
        // Without the materialized polynomial, verification needs every
        // touched component to be one-dimensional so that the single swept
        // value determines all evaluations up to scalars.
        for (int i = 0; i < 2 * d; ++i)
          if (a->component(degs[static_cast<size_t>(i)]).size() != 1)
            fail("ResourceBound",
                 "cannot verify centrality without materializing the polynomial");
        if (!commutes_with_all(fv, a)) continue;
      }
      return res;
    } while (next_odometer(od, radix));
    return std::nullopt;
  };

  // Structured candidate: when exactly d degrees are available, use each
  // support element once per side.
  if (S == d) {
    std::vector<int> degs = supp;
    degs.insert(degs.end(), supp.begin(), supp.end());
    if (auto r = try_tuple(degs)) return *r;
  }
  // General enumeration over supp^(2d).
  std::vector<int> od(static_cast<size_t>(2 * d), 0);
  std::vector<int> radix(static_cast<size_t>(2 * d), S);
  double total = 1;
  for (int i = 0; i < 2 * d; ++i) total *= S;
  if (total > 4e6)
    fail("SearchExhausted", "structured candidate failed and the degree-tuple "
                            "space is too large to enumerate");
  do {
    std::vector<int> degs(static_cast<size_t>(2 * d));
    for (int i = 0; i < 2 * d; ++i)
      degs[static_cast<size_t>(i)] = supp[static_cast<size_t>(od[i])];
    if (auto r = try_tuple(degs)) return *r;
  } while (next_odometer(od, radix));
  fail("SearchExhausted", "no nonzero staircase evaluation found");
}

IdSpace multilinear_id_space(const AlgebraPtr& a, const std::vector<int>& degrees,
                             int cap) {
  int k = static_cast<int>(degrees.size());
  if (k > cap)
    fail("ResourceBound", "identity-space length " + std::to_string(k) +
                              " exceeds the cap " + std::to_string(cap));
  IdSpace out;
  out.degrees = degrees;
  std::vector<int> order(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) order[static_cast<size_t>(i)] = i + 1;
  std::vector<std::vector<int>> monos;
  do monos.push_back(order);
  while (std::next_permutation(order.begin(), order.end()));
  out.monomials = monos;
  int cols = static_cast<int>(monos.size());

  std::vector<int> radix(static_cast<size_t>(k));
  bool empty = false;
  long long tuples = 1;
  for (int i = 0; i < k; ++i) {
    radix[static_cast<size_t>(i)] =
        static_cast<int>(a->component(degrees[static_cast<size_t>(i)]).size());
    if (radix[static_cast<size_t>(i)] == 0) empty = true;
    tuples *= std::max(radix[static_cast<size_t>(i)], 1);
  }
  if (empty) {
    // No substitutions exist: every coefficient vector is an identity.
    std::vector<Vec> full;
    for (int c = 0; c < cols; ++c) {
      Vec v(static_cast<size_t>(cols), CycScalar(a->field()));
      v[static_cast<size_t>(c)] = CycScalar::one(a->field());
      full.push_back(v);
    }
    out.kernel = full;
    return out;
  }

  Mat m(static_cast<int>(tuples) * a->dim(), cols, a->field());
  std::vector<int> od(static_cast<size_t>(k), 0);
  int row0 = 0;
  do {
    std::vector<AlgElement> vals;
    for (int i = 0; i < k; ++i)
      vals.push_back(AlgElement::basis(
          a, a->component(degrees[static_cast<size_t>(i)])[static_cast<size_t>(od[i])]));
    for (int c = 0; c < cols; ++c) {
      AlgElement prod = vals[static_cast<size_t>(monos[static_cast<size_t>(c)][0] - 1)];
      for (int p = 1; p < k && !prod.is_zero(); ++p)
        prod = prod * vals[static_cast<size_t>(monos[static_cast<size_t>(c)][static_cast<size_t>(p)] - 1)];
      for (int r = 0; r < a->dim(); ++r) m.at(row0 + r, c) = prod.coord(r);
    }
    row0 += a->dim();
  } while (next_odometer(od, radix));

  out.kernel = rref_basis(m.nullspace(), a->field());
  return out;
}

CompareReport compare_id_spaces(const AlgebraPtr& a1, const AlgebraPtr& a2, int max_len) {
  if (!a1->group()->same_as(*a2->group()))
    fail("GroupMismatch", "identity spaces compare only over a common grading group");
  if (a1->field()->order() != a2->field()->order())
    fail("OrderMismatch", "identity spaces compare only over a common field");
  const GroupPtr& grp = a1->group();
  for (int k = 1; k <= max_len; ++k) {
    std::vector<int> od(static_cast<size_t>(k), 0);
    std::vector<int> radix(static_cast<size_t>(k), grp->order());
    do {
      std::vector<int> degs(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) degs[static_cast<size_t>(i)] = od[static_cast<size_t>(i)];
      IdSpace s1 = multilinear_id_space(a1, degs, max_len);
      IdSpace s2 = multilinear_id_space(a2, degs, max_len);
      if (!same_span(s1.kernel, s2.kernel, a1->field())) {
        const Vec* w = nullptr;
        const IdSpace* src = nullptr;
        for (const Vec& v : s1.kernel)
          if (!in_span(s2.kernel, v, a1->field())) { w = &v; src = &s1; break; }
        if (!w)
          for (const Vec& v : s2.kernel)
            if (!in_span(s1.kernel, v, a1->field())) { w = &v; src = &s2; break; }
        GradedPolynomial poly(grp, a1->field());
        for (size_t c = 0; c < w->size(); ++c) {
          if ((*w)[c].is_zero()) continue;
          GMonomial m;
          for (int idx : src->monomials[c])
            m.emplace_back(idx, degs[static_cast<size_t>(idx - 1)]);
          poly.add_term(m, (*w)[c]);
        }
        return {false, degs, poly};
      }
    } while (next_odometer(od, radix));
  }
  return {true, {}, std::nullopt};
}

}  // namespace gpi
