#ifndef GPI_GROUP_HPP
#define GPI_GROUP_HPP

#include <memory>
#include <string>
#include <vector>

#include "gpi/error.hpp"

namespace gpi {

/// A finite group as a validated Cayley table. Element 0 is always the
/// identity; element order is fixed at construction and is part of the
/// canonical form used by every file format downstream.
class FiniteGroup {
public:
  FiniteGroup(std::string name, std::vector<std::string> element_names,
              std::vector<std::vector<int>> table);

  static std::shared_ptr<const FiniteGroup> trivial();
  static std::shared_ptr<const FiniteGroup> cyclic(int n);
  static std::shared_ptr<const FiniteGroup> dihedral(int n);
  static std::shared_ptr<const FiniteGroup> symmetric(int n);
  static std::shared_ptr<const FiniteGroup> product(
      const std::shared_ptr<const FiniteGroup>& a,
      const std::shared_ptr<const FiniteGroup>& b);

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  const std::string& element_name(int i) const { return names_[static_cast<size_t>(i)]; }
  int element_index(const std::string& name) const;  // UnknownGroupElement on miss
  int mul(int a, int b) const { return table_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int inverse(int a) const { return inv_[static_cast<size_t>(a)]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool is_subgroup(const std::vector<int>& h) const;
  bool is_normal(const std::vector<int>& h) const;
  // Closure of a generating set, sorted.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;

  bool same_as(const FiniteGroup& o) const {
    return names_ == o.names_ && table_ == o.table_;
  }

private:
  void validate() const;
  std::string name_;
  int n_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Surjection G -> G/N for a normal subgroup N, with the quotient group
/// materialized as its own Cayley table.
struct QuotientMap {
  GroupPtr source;
  std::vector<int> kernel;      // sorted element indices of N
  GroupPtr target;              // Q = G/N
  std::vector<int> projection;  // source element -> target element

  int project(int g) const { return projection[static_cast<size_t>(g)]; }
};

QuotientMap quotient(const GroupPtr& g, std::vector<int> kernel);

// One minimal-index representative per right coset Hg; identity first.
std::vector<int> transversal(const GroupPtr& g, const std::vector<int>& h);

// Largest candidate N keeping all distinct length-L products of the
// generators distinct in G/N; ties by lowest lexicographic index set.
QuotientMap separating_quotient(const GroupPtr& g,
                                const std::vector<int>& generators, int length,
                                const std::vector<std::vector<int>>& candidates);

}  // namespace gpi

#endif
