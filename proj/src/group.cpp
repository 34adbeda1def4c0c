#include "gpi/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gpi {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> element_names,
                         std::vector<std::vector<int>> table)
    : name_(std::move(name)),
      n_(static_cast<int>(element_names.size())),
      names_(std::move(element_names)),
      table_(std::move(table)) {
  validate();
  inv_.assign(static_cast<size_t>(n_), -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) inv_[static_cast<size_t>(a)] = b;
}

void FiniteGroup::validate() const {
  if (n_ == 0) fail("NotAGroup", "empty element set");
  if (static_cast<int>(table_.size()) != n_)
    fail("NotAGroup", "table has wrong number of rows");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n_)
      fail("NotAGroup", "table has wrong number of columns");
    for (int x : row)
      if (x < 0 || x >= n_) fail("NotAGroup", "table entry out of range");
  }
  // Row/column 0 must be identity maps.
  for (int a = 0; a < n_; ++a) {
    if (table_[0][static_cast<size_t>(a)] != a || table_[static_cast<size_t>(a)][0] != a)
      fail("NotAGroup", "element 0 is not an identity");
  }
  // Latin square.
  for (int a = 0; a < n_; ++a) {
    std::set<int> row(table_[static_cast<size_t>(a)].begin(), table_[static_cast<size_t>(a)].end());
    if (static_cast<int>(row.size()) != n_)
      fail("NotAGroup", "row " + std::to_string(a) + " is not a permutation");
    std::set<int> col;
    for (int b = 0; b < n_; ++b) col.insert(table_[static_cast<size_t>(b)][static_cast<size_t>(a)]);
    if (static_cast<int>(col.size()) != n_)
      fail("NotAGroup", "column " + std::to_string(a) + " is not a permutation");
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail("NotAGroup", "associativity fails at (" + names_[static_cast<size_t>(a)] + "," +
                                names_[static_cast<size_t>(b)] + "," + names_[static_cast<size_t>(c)] + ")");
}

int FiniteGroup::element_index(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[static_cast<size_t>(i)] == name) return i;
  fail("UnknownGroupElement", "no element named '" + name + "' in group " + name_);
}

GroupPtr FiniteGroup::trivial() {
  return std::make_shared<FiniteGroup>("C1", std::vector<std::string>{"e"},
                                       std::vector<std::vector<int>>{{0}});
}

GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1) fail("NotAGroup", "cyclic order must be positive");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(i == 0 ? "e" : (i == 1 ? "t" : "t" + std::to_string(i)));
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  return std::make_shared<FiniteGroup>("C" + std::to_string(n), names, t);
}

GroupPtr FiniteGroup::dihedral(int n) {
  if (n < 1) fail("NotAGroup", "dihedral parameter must be positive");
  // elements r^i s^j, index = i + n*j
  int ord = 2 * n;
  auto idx = [n](int i, int j) { return i + n * j; };
  std::vector<std::string> names(static_cast<size_t>(ord));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < n; ++i) {
      std::string nm;
      if (i == 0 && j == 0) nm = "e";
      else {
        if (i > 0) nm += (i == 1 ? "r" : "r" + std::to_string(i));
        if (j > 0) nm += "s";
      }
      names[static_cast<size_t>(idx(i, j))] = nm;
    }
  std::vector<std::vector<int>> t(static_cast<size_t>(ord), std::vector<int>(static_cast<size_t>(ord)));
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^{i1 + (-1)^{j1} i2} s^{j1+j2}
          int i = ((i1 + (j1 ? n - i2 : i2)) % n + n) % n;
          int j = (j1 + j2) % 2;
          t[static_cast<size_t>(idx(i1, j1))][static_cast<size_t>(idx(i2, j2))] = idx(i, j);
        }
  return std::make_shared<FiniteGroup>("D" + std::to_string(n), names, t);
}

GroupPtr FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) fail("NotAGroup", "symmetric group supported for 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  // identity first, others in lexicographic order
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string nm = "p";
    for (int x : q) nm += std::to_string(x + 1);
    names.push_back(q == perms[0] ? "e" : nm);
  }
  size_t ord = perms.size();
  std::vector<std::vector<int>> t(ord, std::vector<int>(ord));
  for (size_t a = 0; a < ord; ++a)
    for (size_t b = 0; b < ord; ++b) {
      std::vector<int> c(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        c[static_cast<size_t>(i)] = perms[a][static_cast<size_t>(perms[b][static_cast<size_t>(i)])];
      t[a][b] = index[c];
    }
  return std::make_shared<FiniteGroup>("S" + std::to_string(n), names, t);
}

GroupPtr FiniteGroup::product(const GroupPtr& a, const GroupPtr& b) {
  int na = a->order(), nb = b->order();
  auto idx = [nb](int i, int j) { return i * nb + j; };
  std::vector<std::string> names;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      names.push_back("(" + a->element_name(i) + "," + b->element_name(j) + ")");
  std::vector<std::vector<int>> t(static_cast<size_t>(na * nb),
                                  std::vector<int>(static_cast<size_t>(na * nb)));
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2)
          t[static_cast<size_t>(idx(i1, j1))][static_cast<size_t>(idx(i2, j2))] =
              idx(a->mul(i1, i2), b->mul(j1, j2));
  return std::make_shared<FiniteGroup>(a->name() + "x" + b->name(), names, t);
}

bool FiniteGroup::is_subgroup(const std::vector<int>& h) const {
  if (h.empty()) return false;
  std::set<int> s(h.begin(), h.end());
  if (!s.count(0)) return false;
  for (int a : s)
    for (int b : s)
      if (!s.count(mul(a, b))) return false;
  return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& h) const {
  std::set<int> s(h.begin(), h.end());
  for (int g = 0; g < n_; ++g)
    for (int x : s)
      if (!s.count(mul(mul(g, x), inverse(g)))) return false;
  return true;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::set<int> s{0};
  for (;;) {
    std::set<int> next = s;
    for (int a : s)
      for (int g : gens) next.insert(mul(a, g));
    if (next == s) break;
    s = std::move(next);
  }
  return {s.begin(), s.end()};
}

QuotientMap quotient(const GroupPtr& g, std::vector<int> kernel) {
  std::sort(kernel.begin(), kernel.end());
  kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());
  if (!g->is_subgroup(kernel)) fail("NotASubgroup", "kernel is not a subgroup");
  if (!g->is_normal(kernel)) fail("NotNormal", "kernel is not normal");
  int n = g->order();
  // Cosets keyed by sorted content; representatives in minimal-index order.
  std::vector<int> proj(static_cast<size_t>(n), -1);
  std::vector<int> reps;
  std::map<std::vector<int>, int> seen;
  for (int x = 0; x < n; ++x) {
    std::vector<int> coset;
    for (int k : kernel) coset.push_back(g->mul(k, x));  // right coset Nx
    std::sort(coset.begin(), coset.end());
    auto it = seen.find(coset);
    if (it == seen.end()) {
      it = seen.emplace(coset, static_cast<int>(reps.size())).first;
      reps.push_back(x);
    }
    proj[static_cast<size_t>(x)] = it->second;
  }
  int q = static_cast<int>(reps.size());
  std::vector<std::string> names;
  for (int r : reps) names.push_back(g->element_name(r) + "N");
  std::vector<std::vector<int>> t(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q)));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          proj[static_cast<size_t>(g->mul(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)]))];
  auto target = std::make_shared<FiniteGroup>(g->name() + "/N", names, t);
  return QuotientMap{g, std::move(kernel), target, std::move(proj)};
}

std::vector<int> transversal(const GroupPtr& g, const std::vector<int>& h) {
  if (!g->is_subgroup(h)) fail("NotASubgroup", "H is not a subgroup");
  std::vector<bool> covered(static_cast<size_t>(g->order()), false);
  std::vector<int> reps;
  for (int x = 0; x < g->order(); ++x) {
    if (covered[static_cast<size_t>(x)]) continue;
    reps.push_back(x);
    for (int k : h) covered[static_cast<size_t>(g->mul(k, x))] = true;  // coset Hx
  }
  return reps;
}

namespace {

std::set<int> length_products(const FiniteGroup& g, const std::vector<int>& gens, int length) {
  std::set<int> cur{0};
  for (int step = 0; step < length; ++step) {
    std::set<int> next;
    for (int a : cur)
      for (int x : gens) next.insert(g.mul(a, x));
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

QuotientMap separating_quotient(const GroupPtr& g, const std::vector<int>& generators,
                                int length, const std::vector<std::vector<int>>& candidates) {
  if (candidates.empty()) fail("NoCandidate", "no candidate normal subgroups given");
  // Distinct products of the given elements of length L, as words.
  std::vector<std::vector<int>> words;  // all length-L words in the generators
  {
    std::vector<std::vector<int>> cur{{}};
    for (int step = 0; step < length; ++step) {
      std::vector<std::vector<int>> next;
      for (const auto& w : cur)
        for (int x : generators) {
          auto w2 = w;
          w2.push_back(x);
          next.push_back(std::move(w2));
        }
      cur = std::move(next);
    }
    words = std::move(cur);
  }
  auto eval = [](const FiniteGroup& grp, const std::vector<int>& w, const std::vector<int>& proj) {
    int acc = 0;
    for (int x : w) acc = grp.mul(acc, proj.empty() ? x : proj[static_cast<size_t>(x)]);
    return acc;
  };
  // Group words by their product in G; a candidate separates when words with
  // distinct G-products stay distinct in Q.
  const QuotientMap* best = nullptr;
  std::vector<QuotientMap> built;
  built.reserve(candidates.size());
  for (const auto& cand : candidates) built.push_back(quotient(g, cand));
  std::vector<int> best_kernel;
  for (const auto& qm : built) {
    std::map<int, int> gq;  // product in G -> product in Q
    bool ok = true;
    for (const auto& w : words) {
      int pg = eval(*g, w, {});
      int pq = eval(*qm.target, w, qm.projection);
      auto it = gq.find(pg);
      if (it == gq.end()) gq[pg] = pq;
    }
    std::set<int> qvals;
    for (const auto& [pg, pq] : gq) qvals.insert(pq);
    ok = qvals.size() == gq.size();
    if (!ok) continue;
    if (!best || qm.kernel.size() > best->kernel.size() ||
        (qm.kernel.size() == best->kernel.size() && qm.kernel < best->kernel)) {
      best = &qm;
    }
  }
  if (!best) fail("NoCandidate", "no candidate satisfies the separation property");
  return *best;
}

}  // namespace gpi
