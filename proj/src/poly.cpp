#include "gpi/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace gpi {

void GradedPolynomial::add_term(const GMonomial& m, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& o) const {
  GradedPolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

GradedPolynomial GradedPolynomial::operator-(const GradedPolynomial& o) const {
  GradedPolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& o) const {
  GradedPolynomial r(group_, field_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      GMonomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      r.add_term(m, c1 * c2);
    }
  return r;
}

GradedPolynomial GradedPolynomial::scaled(const CycScalar& s) const {
  GradedPolynomial r(group_, field_);
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

bool GradedPolynomial::operator==(const GradedPolynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it1 = terms_.begin();
  auto it2 = o.terms_.begin();
  for (; it1 != terms_.end(); ++it1, ++it2)
    if (it1->first != it2->first || it1->second != it2->second) return false;
  return true;
}

int GradedPolynomial::monomial_degree(const GMonomial& m) const {
  int g = 0;
  for (const GVar& v : m) g = group_->mul(g, v.second);
  return g;
}

std::vector<GVar> GradedPolynomial::variables() const {
  std::set<GVar> s;
  for (const auto& [m, c] : terms_)
    for (const GVar& v : m) s.insert(v);
  return {s.begin(), s.end()};
}

std::vector<int> GradedPolynomial::variable_indices() const {
  std::set<int> s;
  for (const auto& [m, c] : terms_)
    for (const GVar& v : m) s.insert(v.first);
  return {s.begin(), s.end()};
}

std::string GradedPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) { os << "-"; cs = cs.substr(1); }
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    first = false;
    bool plain_one = cs == "1";
    bool compound = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
    if (m.empty()) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (!plain_one) os << (compound ? "(" + cs + ")" : cs) << "*";
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) os << "*";
      os << "x[" << m[i].first << "," << group_->element_name(m[i].second) << "]";
    }
  }
  return os.str();
}

void Poly::add_term(const std::vector<int>& m, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(field_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      std::vector<int> m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      r.add_term(m, c1 * c2);
    }
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

std::vector<int> Poly::variable_indices() const {
  std::set<int> s;
  for (const auto& [m, c] : terms_)
    for (int v : m) s.insert(v);
  return {s.begin(), s.end()};
}

int Poly::max_index() const {
  int mx = 0;
  for (const auto& [m, c] : terms_)
    for (int v : m) mx = std::max(mx, v);
  return mx;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) { os << "-"; cs = cs.substr(1); }
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    first = false;
    if (cs != "1" || m.empty()) os << cs << (m.empty() ? "" : "*");
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) os << "*";
      os << "x[" << m[i] << ",?]";
    }
  }
  return os.str();
}

// --- parser ------------------------------------------------------------------

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;
  const GroupPtr& group;
  const FieldPtr& field;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }

  bool eat(char c) {
    if (peek(c)) { ++pos; return true; }
    return false;
  }

  [[noreturn]] void err(const std::string& what) {
    fail("SyntaxError", what + " at position " + std::to_string(pos) + " in '" + s + "'");
  }

  // A scalar factor: rational, z power, rational*z, or parenthesized literal.
  CycScalar scalar_factor() {
    skip();
    if (eat('(')) {
      size_t start = pos;
      int depth = 1;
      while (pos < s.size() && depth > 0) {
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')') --depth;
        ++pos;
      }
      if (depth != 0) err("unbalanced parenthesis");
      return CycScalar::parse(s.substr(start, pos - 1 - start), field);
    }
    size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '/' || s[pos] == 'z' || s[pos] == '^'))
      ++pos;
    if (pos == start) err("expected scalar");
    return CycScalar::parse(s.substr(start, pos - start), field);
  }

  GVar var() {
    skip();
    if (pos >= s.size() || s[pos] != 'x') err("expected variable");
    ++pos;
    if (!eat('[')) err("expected '['");
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) err("expected variable index");
    int idx = std::stoi(s.substr(start, pos - start));
    if (!eat(',')) err("expected ','");
    skip();
    start = pos;
    while (pos < s.size() && s[pos] != ']' &&
           !std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
    std::string name = s.substr(start, pos - start);
    if (!eat(']')) err("expected ']'");
    int g = group->element_index(name);
    return {idx, g};
  }

  bool at_var() {
    skip();
    return pos < s.size() && s[pos] == 'x';
  }

  // term := factor ('*' factor)*, each factor a scalar or a variable.
  void term(GradedPolynomial& acc, bool negate) {
    CycScalar coef = CycScalar::one(field);
    GMonomial mono;
    bool any = false;
    for (;;) {
      if (at_var()) mono.push_back(var());
      else coef = coef * scalar_factor();
      any = true;
      if (!eat('*')) break;
    }
    if (!any) err("empty term");
    acc.add_term(mono, negate ? -coef : coef);
  }

  GradedPolynomial parse() {
    GradedPolynomial acc(group, field);
    skip();
    if (pos >= s.size()) err("empty polynomial");
    bool neg = eat('-');
    if (!neg) eat('+');
    term(acc, neg);
    for (;;) {
      skip();
      if (pos >= s.size()) break;
      if (eat('+')) term(acc, false);
      else if (eat('-')) term(acc, true);
      else err("expected '+' or '-'");
    }
    return acc;
  }
};

}  // namespace

GradedPolynomial parse_poly(const std::string& text, const GroupPtr& g, const FieldPtr& f) {
  PolyParser p{text, 0, g, f};
  return p.parse();
}

// --- structural operations ---------------------------------------------------

GradedPolynomial project(const GradedPolynomial& f, int g) {
  GradedPolynomial r(f.group(), f.field());
  for (const auto& [m, c] : f.terms())
    if (f.monomial_degree(m) == g) r.add_term(m, c);
  return r;
}

GradedPolynomial transpose(const GradedPolynomial& f) {
  GradedPolynomial r(f.group(), f.field());
  for (const auto& [m, c] : f.terms()) {
    GMonomial rev(m.rbegin(), m.rend());
    r.add_term(rev, c);
  }
  return r;
}

Poly transpose(const Poly& f) {
  Poly r(f.field());
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> rev(m.rbegin(), m.rend());
    r.add_term(rev, c);
  }
  return r;
}

Poly check_product(const Poly& f) {
  int m = f.max_index();
  Poly ft = transpose(f);
  Poly shifted(f.field());
  for (const auto& [mono, c] : ft.terms()) {
    std::vector<int> m2 = mono;
    for (int& v : m2) v += m;
    shifted.add_term(m2, c);
  }
  return f * shifted;
}

GradedPolynomial psi_quotient(const GradedPolynomial& f, const QuotientMap& q) {
  if (!q.source->same_as(*f.group()))
    fail("GroupMismatch", "polynomial is not graded by the quotient map's source");
  GradedPolynomial r(q.target, f.field());
  for (const auto& [m, c] : f.terms()) {
    GMonomial m2 = m;
    for (GVar& v : m2) v.second = q.project(v.second);
    r.add_term(m2, c);
  }
  return r;
}

bool is_q_stable(const GradedPolynomial& f, const QuotientMap& q) {
  if (!q.source->same_as(*f.group()))
    fail("GroupMismatch", "polynomial is not graded by the quotient map's source");
  // The diagram is required to commute on f: at the degrees f actually
  // realizes, and at e, whose projection the stability property is for.
  // Quantifying over all of G would reject any polynomial whose monomial
  // degrees do not cover entire cosets (even 2*x[1,e] for C4 -> C2).
  std::set<int> degrees{0};
  for (const auto& [m, c] : f.terms()) degrees.insert(f.monomial_degree(m));
  for (int g : degrees) {
    GradedPolynomial lhs = psi_quotient(project(f, g), q);
    GradedPolynomial rhs = project(psi_quotient(f, q), q.project(g));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::vector<std::pair<bool, int>> regev_blocks(int n) {
  std::vector<std::pair<bool, int>> blocks;
  for (int k = 1; k <= n; ++k) {
    blocks.emplace_back(true, 2 * k - 1);
    blocks.emplace_back(false, 2 * k - 1);
  }
  return blocks;
}

Poly regev(int n, const FieldPtr& f, bool force) {
  if (n < 1) fail("BadShape", "regev block count must be >= 1");
  if (n > 2 && !force)
    fail("ResourceBound", "regev(" + std::to_string(n) +
                              ") has (" + std::to_string(n * n) + "!)^2 terms; pass force to build it");
  int d = n * n;
  std::vector<int> sigma(static_cast<size_t>(d)), tau(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) sigma[static_cast<size_t>(i)] = tau[static_cast<size_t>(i)] = i;
  auto parity = [](const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inv;
    return inv % 2;
  };
  Poly out(f);
  std::vector<std::pair<bool, int>> blocks = regev_blocks(n);
  do {
    int ps = parity(sigma);
    std::vector<int> tau2(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) tau2[static_cast<size_t>(i)] = i;
    do {
      int sign = (ps + parity(tau2)) % 2;
      std::vector<int> mono;
      mono.reserve(static_cast<size_t>(2 * d));
      int xi = 0, yi = 0;
      for (const auto& [is_x, size] : blocks)
        for (int s = 0; s < size; ++s) {
          if (is_x) mono.push_back(sigma[static_cast<size_t>(xi++)] + 1);
          else mono.push_back(tau2[static_cast<size_t>(yi++)] + 1 + d);
        }
      out.add_term(mono, CycScalar(f, Rational(sign ? -1 : 1)));
    } while (std::next_permutation(tau2.begin(), tau2.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

GradedPolynomial ungraded_embed(const Poly& f, const GroupPtr& g, size_t term_cap) {
  GradedPolynomial out(g, f.field());
  size_t total = 0;
  int ng = g->order();
  for (const auto& [mono, c] : f.terms()) {
    size_t expansions = 1;
    for (size_t i = 0; i < mono.size(); ++i) {
      expansions *= static_cast<size_t>(ng);
      if (total + expansions > term_cap)
        fail("ResourceBound", "embedding would exceed the term cap of " +
                                  std::to_string(term_cap));
    }
    total += expansions;
    // Odometer over degree choices per position.
    std::vector<int> ods(mono.size(), 0);
    for (;;) {
      GMonomial m2;
      m2.reserve(mono.size());
      for (size_t i = 0; i < mono.size(); ++i) m2.emplace_back(mono[i], ods[i]);
      out.add_term(m2, c);
      size_t p = 0;
      while (p < ods.size()) {
        if (++ods[p] < ng) break;
        ods[p++] = 0;
      }
      if (p == ods.size()) break;
    }
  }
  return out;
}

GradedPolynomial with_degrees(const Poly& f, const std::vector<int>& degrees,
                              const GroupPtr& g) {
  GradedPolynomial out(g, f.field());
  for (const auto& [mono, c] : f.terms()) {
    GMonomial m2;
    m2.reserve(mono.size());
    for (int v : mono) {
      if (v < 1 || v > static_cast<int>(degrees.size()))
        fail("MissingAssignment", "no degree given for variable x" + std::to_string(v));
      m2.emplace_back(v, degrees[static_cast<size_t>(v - 1)]);
    }
    out.add_term(m2, c);
  }
  return out;
}

bool is_multilinear(const GradedPolynomial& f) {
  std::vector<int> idx = f.variable_indices();
  if (f.is_zero()) return true;
  for (const auto& [m, c] : f.terms()) {
    std::set<int> seen;
    for (const GVar& v : m) {
      if (!seen.insert(v.first).second) return false;
    }
    if (seen.size() != idx.size()) return false;
  }
  return true;
}

bool is_multilinear(const Poly& f) {
  std::vector<int> idx = f.variable_indices();
  if (f.is_zero()) return true;
  for (const auto& [m, c] : f.terms()) {
    std::set<int> seen;
    for (int v : m) {
      if (!seen.insert(v).second) return false;
    }
    if (seen.size() != idx.size()) return false;
  }
  return true;
}

}  // namespace gpi
