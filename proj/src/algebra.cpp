#include "gpi/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace gpi {

Cocycle::Cocycle(GroupPtr h, FieldPtr field, std::vector<std::vector<CycScalar>> values)
    : h_(std::move(h)), field_(std::move(field)), values_(std::move(values)) {
  int n = h_->order();
  if (static_cast<int>(values_.size()) != n)
    fail("BadShape", "cocycle value array must be |H| x |H|");
  for (const auto& row : values_)
    if (static_cast<int>(row.size()) != n)
      fail("BadShape", "cocycle value array must be |H| x |H|");
  CycScalar one = CycScalar::one(field_);
  for (int g = 0; g < n; ++g) {
    if (at(0, g) != one || at(g, 0) != one)
      fail("NotNormalized", "alpha(e,h) and alpha(h,e) must equal 1 (fails at h=" +
                                h_->element_name(g) + ")");
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const CycScalar& v = at(g, h);
      if (v.is_zero() || v * v.conj() != one)
        fail("NotRootOfUnity", "alpha(" + h_->element_name(g) + "," + h_->element_name(h) +
                                   ") is not a root of unity");
    }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        // alpha(g,h) alpha(gh,k) = alpha(g,hk) alpha(h,k)
        if (at(g, h) * at(h_->mul(g, h), k) != at(g, h_->mul(h, k)) * at(h, k))
          fail("CocycleIdentityFails", "(" + h_->element_name(g) + "," + h_->element_name(h) +
                                           "," + h_->element_name(k) + ")");
      }
}

Cocycle Cocycle::trivial(const GroupPtr& h, const FieldPtr& field) {
  int n = h->order();
  std::vector<std::vector<CycScalar>> v(
      static_cast<size_t>(n), std::vector<CycScalar>(static_cast<size_t>(n), CycScalar::one(field)));
  return Cocycle(h, field, std::move(v));
}

Cocycle cocycle_validate(const GroupPtr& h, const FieldPtr& field,
                         std::vector<std::vector<CycScalar>> values) {
  return Cocycle(h, field, std::move(values));
}

GradedAlgebra::GradedAlgebra(FieldPtr field, GroupPtr group,
                             std::vector<std::string> basis_names, std::vector<int> degrees,
                             std::vector<std::vector<std::vector<SCTerm>>> mul_table,
                             std::optional<std::vector<CycScalar>> unit,
                             std::optional<TwistedMatrixForm> tm)
    : field_(std::move(field)),
      group_(std::move(group)),
      basis_names_(std::move(basis_names)),
      degrees_(std::move(degrees)),
      mul_(std::move(mul_table)),
      unit_(std::move(unit)),
      tm_(std::move(tm)) {
  validate();
  components_.assign(static_cast<size_t>(group_->order()), {});
  for (int i = 0; i < dim(); ++i)
    components_[static_cast<size_t>(degree(i))].push_back(i);
}

const std::vector<CycScalar>& GradedAlgebra::unit_coords() const {
  if (!unit_) fail("NotUnital", "algebra has no unit element");
  return *unit_;
}

std::vector<int> GradedAlgebra::support() const {
  std::vector<int> s;
  for (int g = 0; g < group_->order(); ++g)
    if (!components_[static_cast<size_t>(g)].empty()) s.push_back(g);
  return s;
}

void GradedAlgebra::validate() const {
  int d = dim();
  if (static_cast<int>(basis_names_.size()) != d) fail("BadShape", "basis name count mismatch");
  if (static_cast<int>(mul_.size()) != d) fail("BadShape", "structure constant shape mismatch");
  for (const auto& row : mul_)
    if (static_cast<int>(row.size()) != d) fail("BadShape", "structure constant shape mismatch");
  for (int i = 0; i < d; ++i)
    if (degree(i) < 0 || degree(i) >= group_->order()) fail("BadShape", "degree out of range");
  // Grading compatibility: nonzero c_{ij}^k needs deg k = deg i * deg j.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& t : mul_[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
        if (t.c.is_zero()) continue;
        if (degree(t.k) != group_->mul(degree(i), degree(j)))
          fail("GradingIncompatible",
               "product " + basis_names_[static_cast<size_t>(i)] + "*" +
                   basis_names_[static_cast<size_t>(j)] + " hits wrong component");
      }
  // Associativity on all basis triples.
  auto mulvec = [&](const std::vector<CycScalar>& v, int j) {
    std::vector<CycScalar> r(static_cast<size_t>(d), CycScalar(field_));
    for (int i = 0; i < d; ++i) {
      if (v[static_cast<size_t>(i)].is_zero()) continue;
      for (const auto& t : mul_[static_cast<size_t>(i)][static_cast<size_t>(j)])
        r[static_cast<size_t>(t.k)].addmul(v[static_cast<size_t>(i)], t.c);
    }
    return r;
  };
  auto mulvec_left = [&](int i, const std::vector<CycScalar>& v) {
    std::vector<CycScalar> r(static_cast<size_t>(d), CycScalar(field_));
    for (int j = 0; j < d; ++j) {
      if (v[static_cast<size_t>(j)].is_zero()) continue;
      for (const auto& t : mul_[static_cast<size_t>(i)][static_cast<size_t>(j)])
        r[static_cast<size_t>(t.k)].addmul(v[static_cast<size_t>(j)], t.c);
    }
    return r;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<CycScalar> ij(static_cast<size_t>(d), CycScalar(field_));
      for (const auto& t : mul_[static_cast<size_t>(i)][static_cast<size_t>(j)])
        ij[static_cast<size_t>(t.k)] += t.c;
      for (int k = 0; k < d; ++k) {
        std::vector<CycScalar> left = mulvec(ij, k);  // (ij)k
        std::vector<CycScalar> jk(static_cast<size_t>(d), CycScalar(field_));
        for (const auto& t : mul_[static_cast<size_t>(j)][static_cast<size_t>(k)])
          jk[static_cast<size_t>(t.k)] += t.c;
        std::vector<CycScalar> right = mulvec_left(i, jk);  // i(jk)
        if (left != right)
          fail("NotAssociative", "associativity fails at basis triple (" +
                                     basis_names_[static_cast<size_t>(i)] + "," +
                                     basis_names_[static_cast<size_t>(j)] + "," +
                                     basis_names_[static_cast<size_t>(k)] + ")");
      }
    }
  if (unit_) {
    if (static_cast<int>(unit_->size()) != d) fail("BadShape", "unit coordinate length mismatch");
    auto mul_by_unit = [&](int b, bool left) {
      std::vector<CycScalar> r(static_cast<size_t>(d), CycScalar(field_));
      for (int i = 0; i < d; ++i) {
        const CycScalar& u = (*unit_)[static_cast<size_t>(i)];
        if (u.is_zero()) continue;
        const auto& terms = left ? mul_[static_cast<size_t>(i)][static_cast<size_t>(b)]
                                 : mul_[static_cast<size_t>(b)][static_cast<size_t>(i)];
        for (const auto& t : terms) r[static_cast<size_t>(t.k)].addmul(u, t.c);
      }
      return r;
    };
    for (int b = 0; b < d; ++b) {
      std::vector<CycScalar> eb(static_cast<size_t>(d), CycScalar(field_));
      eb[static_cast<size_t>(b)] = CycScalar::one(field_);
      if (mul_by_unit(b, true) != eb || mul_by_unit(b, false) != eb)
        fail("BadUnit", "claimed unit does not act as identity on basis " +
                            basis_names_[static_cast<size_t>(b)]);
    }
  }
}

AlgElement::AlgElement(AlgebraPtr a) : alg_(std::move(a)) {
  c_.assign(static_cast<size_t>(alg_->dim()), CycScalar(alg_->field()));
}

AlgElement::AlgElement(AlgebraPtr a, std::vector<CycScalar> coords)
    : alg_(std::move(a)), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != alg_->dim())
    fail("BadShape", "coordinate length does not match algebra dimension");
}

AlgElement AlgElement::basis(const AlgebraPtr& a, int i) {
  AlgElement e(a);
  e.c_[static_cast<size_t>(i)] = CycScalar::one(a->field());
  return e;
}

AlgElement AlgElement::unit(const AlgebraPtr& a) { return AlgElement(a, a->unit_coords()); }

void AlgElement::check_same(const AlgElement& o) const {
  if (alg_ != o.alg_) fail("AlgebraMismatch", "elements live in different algebras");
}

bool AlgElement::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
  check_same(o);
  AlgElement r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
  check_same(o);
  AlgElement r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
  return r;
}

AlgElement AlgElement::operator-() const {
  AlgElement r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

AlgElement AlgElement::scaled(const CycScalar& s) const {
  AlgElement r(*this);
  for (auto& x : r.c_) x = x * s;
  return r;
}

void AlgElement::add_scaled(const AlgElement& o, const CycScalar& s) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i].addmul(o.c_[i], s);
}

void AlgElement::add_scaled_product(const AlgElement& x, const AlgElement& y,
                                    const CycScalar& s) {
  check_same(x);
  check_same(y);
  int d = alg_->dim();
  for (int i = 0; i < d; ++i) {
    if (x.c_[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y.c_[static_cast<size_t>(j)].is_zero()) continue;
      CycScalar xy = x.c_[static_cast<size_t>(i)] * y.c_[static_cast<size_t>(j)];
      if (!s.is_rational() || s.rational_value() != 1) xy = xy * s;
      for (const auto& t : alg_->mul_terms(i, j))
        c_[static_cast<size_t>(t.k)].addmul(xy, t.c);
    }
  }
}

AlgElement AlgElement::operator*(const AlgElement& o) const {
  AlgElement r(alg_);
  r.add_scaled_product(*this, o, CycScalar::one(alg_->field()));
  return r;
}

bool AlgElement::operator==(const AlgElement& o) const {
  check_same(o);
  return c_ == o.c_;
}

AlgElement AlgElement::component(int g) const {
  AlgElement r(alg_);
  for (int i : alg_->component(g)) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
  return r;
}

bool AlgElement::is_homogeneous(int* deg_out) const {
  int deg = -1;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    int d = alg_->degree(static_cast<int>(i));
    if (deg == -1) deg = d;
    else if (deg != d) return false;
  }
  if (deg_out) *deg_out = deg;  // -1 for the zero element
  return true;
}

std::map<int, AlgElement> AlgElement::components() const {
  std::map<int, AlgElement> out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    int g = alg_->degree(static_cast<int>(i));
    auto it = out.find(g);
    if (it == out.end()) it = out.emplace(g, AlgElement(alg_)).first;
    it->second.c_[i] = c_[i];
  }
  return out;
}

std::string AlgElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].str() << ")*" << alg_->basis_name(static_cast<int>(i));
  }
  if (first) os << "0";
  return os.str();
}

// --- constructors -----------------------------------------------------------

AlgebraPtr twisted_group_algebra(const Cocycle& c) {
  const GroupPtr& h = c.group();
  const FieldPtr& f = c.field();
  int n = h->order();
  std::vector<std::string> names;
  std::vector<int> degs;
  for (int i = 0; i < n; ++i) {
    names.push_back("u_" + h->element_name(i));
    degs.push_back(i);
  }
  std::vector<std::vector<std::vector<SCTerm>>> mul(
      static_cast<size_t>(n), std::vector<std::vector<SCTerm>>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = {SCTerm{h->mul(a, b), c.at(a, b)}};
  std::vector<CycScalar> unit(static_cast<size_t>(n), CycScalar(f));
  unit[0] = CycScalar::one(f);
  TwistedMatrixForm tm{c, {0}};
  return std::make_shared<GradedAlgebra>(f, h, names, degs, mul, unit, tm);
}

AlgebraPtr field_algebra(const FieldPtr& field, const GroupPtr& group) {
  std::vector<std::vector<std::vector<SCTerm>>> mul{{{SCTerm{0, CycScalar::one(field)}}}};
  std::vector<CycScalar> unit{CycScalar::one(field)};
  return std::make_shared<GradedAlgebra>(field, group, std::vector<std::string>{"1"},
                                         std::vector<int>{0}, mul, unit);
}

AlgebraPtr matrix_graded(const AlgebraPtr& b, const std::vector<int>& gtuple) {
  int n = static_cast<int>(gtuple.size());
  if (n < 1) fail("BadShape", "matrix grading needs a nonempty tuple");
  const GroupPtr& g = b->group();
  for (int x : gtuple)
    if (x < 0 || x >= g->order()) fail("UnknownGroupElement", "gtuple entry out of range");
  int db = b->dim();
  int d = db * n * n;
  auto idx = [&](int bi, int i, int j) { return (bi * n + i) * n + j; };
  std::vector<std::string> names(static_cast<size_t>(d));
  std::vector<int> degs(static_cast<size_t>(d));
  for (int bi = 0; bi < db; ++bi)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        names[static_cast<size_t>(idx(bi, i, j))] =
            b->basis_name(bi) + "@e" + std::to_string(i + 1) + std::to_string(j + 1);
        // deg(b (x) e_ij) = g_i^{-1} deg(b) g_j
        degs[static_cast<size_t>(idx(bi, i, j))] =
            g->mul(g->mul(g->inverse(gtuple[static_cast<size_t>(i)]), b->degree(bi)),
                   gtuple[static_cast<size_t>(j)]);
      }
  std::vector<std::vector<std::vector<SCTerm>>> mul(
      static_cast<size_t>(d), std::vector<std::vector<SCTerm>>(static_cast<size_t>(d)));
  for (int b1 = 0; b1 < db; ++b1)
    for (int i1 = 0; i1 < n; ++i1)
      for (int j1 = 0; j1 < n; ++j1)
        for (int b2 = 0; b2 < db; ++b2)
          for (int i2 = 0; i2 < n; ++i2)
            for (int j2 = 0; j2 < n; ++j2) {
              if (j1 != i2) continue;
              std::vector<SCTerm>& out =
                  mul[static_cast<size_t>(idx(b1, i1, j1))][static_cast<size_t>(idx(b2, i2, j2))];
              for (const auto& t : b->mul_terms(b1, b2))
                out.push_back(SCTerm{idx(t.k, i1, j2), t.c});
            }
  std::optional<std::vector<CycScalar>> unit;
  if (b->is_unital()) {
    std::vector<CycScalar> u(static_cast<size_t>(d), CycScalar(b->field()));
    for (int bi = 0; bi < db; ++bi) {
      const CycScalar& ub = b->unit_coords()[static_cast<size_t>(bi)];
      if (ub.is_zero()) continue;
      for (int i = 0; i < n; ++i) u[static_cast<size_t>(idx(bi, i, i))] = ub;
    }
    unit = std::move(u);
  }
  // Keep the factorized form only when B is a pure twisted group algebra.
  std::optional<TwistedMatrixForm> tm;
  if (b->twisted_matrix_form() && b->twisted_matrix_form()->gtuple.size() == 1)
    tm = TwistedMatrixForm{b->twisted_matrix_form()->cocycle, gtuple};
  return std::make_shared<GradedAlgebra>(b->field(), g, names, degs, mul, unit, tm);
}

AlgebraPtr tensor_graded(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->field()->order() != b->field()->order())
    fail("OrderMismatch", "tensor factors have different scalar orders");
  GroupPtr g = FiniteGroup::product(a->group(), b->group());
  int da = a->dim(), db = b->dim();
  int nb = b->group()->order();
  auto gidx = [nb](int ga, int gb) { return ga * nb + gb; };
  auto idx = [db](int i, int j) { return i * db + j; };
  int d = da * db;
  std::vector<std::string> names(static_cast<size_t>(d));
  std::vector<int> degs(static_cast<size_t>(d));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      names[static_cast<size_t>(idx(i, j))] = a->basis_name(i) + "(x)" + b->basis_name(j);
      degs[static_cast<size_t>(idx(i, j))] = gidx(a->degree(i), b->degree(j));
    }
  std::vector<std::vector<std::vector<SCTerm>>> mul(
      static_cast<size_t>(d), std::vector<std::vector<SCTerm>>(static_cast<size_t>(d)));
  for (int i1 = 0; i1 < da; ++i1)
    for (int j1 = 0; j1 < db; ++j1)
      for (int i2 = 0; i2 < da; ++i2)
        for (int j2 = 0; j2 < db; ++j2) {
          auto& out = mul[static_cast<size_t>(idx(i1, j1))][static_cast<size_t>(idx(i2, j2))];
          for (const auto& ta : a->mul_terms(i1, i2))
            for (const auto& tb : b->mul_terms(j1, j2))
              out.push_back(SCTerm{idx(ta.k, tb.k), ta.c * tb.c});
        }
  std::optional<std::vector<CycScalar>> unit;
  if (a->is_unital() && b->is_unital()) {
    std::vector<CycScalar> u(static_cast<size_t>(d), CycScalar(a->field()));
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < db; ++j)
        u[static_cast<size_t>(idx(i, j))] =
            a->unit_coords()[static_cast<size_t>(i)] * b->unit_coords()[static_cast<size_t>(j)];
    unit = std::move(u);
  }
  return std::make_shared<GradedAlgebra>(a->field(), g, names, degs, mul, unit);
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  int d = a->dim();
  std::vector<int> degs(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) degs[static_cast<size_t>(i)] = a->group()->inverse(a->degree(i));
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) names.push_back(a->basis_name(i));
  std::vector<std::vector<std::vector<SCTerm>>> mul(
      static_cast<size_t>(d), std::vector<std::vector<SCTerm>>(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = a->mul_terms(j, i);
  std::optional<std::vector<CycScalar>> unit;
  if (a->is_unital()) unit = a->unit_coords();
  return std::make_shared<GradedAlgebra>(a->field(), a->group(), names, degs, mul, unit);
}

AlgebraPtr regrade_quotient(const AlgebraPtr& a, const QuotientMap& q) {
  if (!q.source->same_as(*a->group()))
    fail("GroupMismatch", "quotient map source differs from the algebra's grading group");
  int d = a->dim();
  std::vector<int> degs(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) degs[static_cast<size_t>(i)] = q.project(a->degree(i));
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) names.push_back(a->basis_name(i));
  std::vector<std::vector<std::vector<SCTerm>>> mul(
      static_cast<size_t>(d), std::vector<std::vector<SCTerm>>(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = a->mul_terms(i, j);
  std::optional<std::vector<CycScalar>> unit;
  if (a->is_unital()) unit = a->unit_coords();
  return std::make_shared<GradedAlgebra>(a->field(), q.target, names, degs, mul, unit);
}

std::map<int, std::vector<std::vector<CycScalar>>> map_components(
    const std::vector<std::vector<CycScalar>>& phi, const AlgebraPtr& a) {
  int d = a->dim();
  const GroupPtr& grp = a->group();
  std::map<int, std::vector<std::vector<CycScalar>>> out;
  for (int g = 0; g < grp->order(); ++g) {
    // (phi_g)_{kj} = phi_{kj} when deg(j)=h and deg(k)=g*h, else 0.
    std::vector<std::vector<CycScalar>> m(
        static_cast<size_t>(d), std::vector<CycScalar>(static_cast<size_t>(d), CycScalar(a->field())));
    bool nonzero = false;
    for (int j = 0; j < d; ++j) {
      int target = grp->mul(g, a->degree(j));
      for (int k = 0; k < d; ++k) {
        if (a->degree(k) != target) continue;
        m[static_cast<size_t>(k)][static_cast<size_t>(j)] = phi[static_cast<size_t>(k)][static_cast<size_t>(j)];
        if (!phi[static_cast<size_t>(k)][static_cast<size_t>(j)].is_zero()) nonzero = true;
      }
    }
    if (nonzero) out.emplace(g, std::move(m));
  }
  return out;
}

AlgElement star_involution(const AlgElement& x) {
  const AlgebraPtr& a = x.algebra();
  const auto& tmopt = a->twisted_matrix_form();
  if (!tmopt) fail("NotTwistedMatrixForm", "algebra was not built as F^alpha(H) (x) M_n");
  const Cocycle& c = tmopt->cocycle;
  const GroupPtr& h = c.group();
  int n = static_cast<int>(tmopt->gtuple.size());
  auto idx = [n](int hb, int i, int j) { return (hb * n + i) * n + j; };
  AlgElement out(a);
  std::vector<CycScalar> coords(static_cast<size_t>(a->dim()), CycScalar(a->field()));
  for (int hb = 0; hb < h->order(); ++hb) {
    int hinv = h->inverse(hb);
    // u_h^{-1} = alpha(h, h^{-1})^{-1} u_{h^{-1}}
    CycScalar scale = c.at(hb, hinv).inv();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const CycScalar& v = x.coord(idx(hb, i, j));
        if (v.is_zero()) continue;
        coords[static_cast<size_t>(idx(hinv, j, i))] += v.conj() * scale;
      }
  }
  return AlgElement(a, std::move(coords));
}

}  // namespace gpi
