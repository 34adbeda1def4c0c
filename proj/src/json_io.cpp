#include "gpi/json_io.hpp"

#include <fstream>

namespace gpi {

Json group_to_json(const GroupPtr& g) {
  Json doc;
  doc["name"] = g->name();
  Json els = Json::array();
  for (int i = 0; i < g->order(); ++i) els.push_back(g->element_name(i));
  doc["elements"] = els;
  doc["table"] = g->table();
  return doc;
}

GroupPtr group_from_json(const Json& doc) {
  if (doc.is_string()) return group_from_name(doc.get<std::string>());
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("table"))
    fail("BadDocument", "group document needs 'elements' and 'table'");
  std::string name = doc.value("name", "G");
  std::vector<std::string> els = doc.at("elements").get<std::vector<std::string>>();
  std::vector<std::vector<int>> table =
      doc.at("table").get<std::vector<std::vector<int>>>();
  return std::make_shared<FiniteGroup>(name, els, table);
}

GroupPtr group_from_name(const std::string& name) {
  if (name == "trivial" || name == "C1") return FiniteGroup::trivial();
  size_t x = name.find('x');
  if (x != std::string::npos)
    return FiniteGroup::product(group_from_name(name.substr(0, x)),
                                group_from_name(name.substr(x + 1)));
  if (name.size() >= 2) {
    int n = std::atoi(name.c_str() + 1);
    if (n >= 1) {
      switch (name[0]) {
        case 'C': return FiniteGroup::cyclic(n);
        case 'D': return FiniteGroup::dihedral(n);
        case 'S': return FiniteGroup::symmetric(n);
        default: break;
      }
    }
  }
  fail("BadDocument", "unknown group name '" + name + "'");
}

Json algebra_to_json(const AlgebraPtr& a) {
  Json doc;
  doc["m"] = a->field()->order();
  doc["group"] = group_to_json(a->group());
  Json basis = Json::array();
  for (int i = 0; i < a->dim(); ++i)
    basis.push_back({{"name", a->basis_name(i)},
                     {"deg", a->group()->element_name(a->degree(i))}});
  doc["basis"] = basis;
  if (a->is_unital()) {
    Json u = Json::array();
    for (const CycScalar& c : a->unit_coords()) u.push_back(c.str());
    doc["unit"] = u;
  } else {
    doc["unit"] = nullptr;
  }
  Json sc = Json::array();
  for (int i = 0; i < a->dim(); ++i)
    for (int j = 0; j < a->dim(); ++j)
      for (const SCTerm& t : a->mul_terms(i, j))
        sc.push_back({{"i", i}, {"j", j}, {"k", t.k}, {"c", t.c.str()}});
  doc["sc"] = sc;
  return doc;
}

AlgebraPtr algebra_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("group") ||
      !doc.contains("basis") || !doc.contains("sc"))
    fail("BadDocument", "algebra document needs 'm', 'group', 'basis', 'sc'");
  FieldPtr f = CycField::get(doc.at("m").get<int>());
  GroupPtr g = group_from_json(doc.at("group"));
  std::vector<std::string> names;
  std::vector<int> degs;
  for (const Json& b : doc.at("basis")) {
    names.push_back(b.at("name").get<std::string>());
    degs.push_back(g->element_index(b.at("deg").get<std::string>()));
  }
  int d = static_cast<int>(names.size());
  std::vector<std::vector<std::vector<SCTerm>>> mul(
      static_cast<size_t>(d), std::vector<std::vector<SCTerm>>(static_cast<size_t>(d)));
  for (const Json& t : doc.at("sc")) {
    int i = t.at("i").get<int>(), j = t.at("j").get<int>(), k = t.at("k").get<int>();
    if (i < 0 || i >= d || j < 0 || j >= d || k < 0 || k >= d)
      fail("BadDocument", "structure constant index out of range");
    mul[static_cast<size_t>(i)][static_cast<size_t>(j)].push_back(
        SCTerm{k, CycScalar::parse(t.at("c").get<std::string>(), f)});
  }
  std::optional<std::vector<CycScalar>> unit;
  if (doc.contains("unit") && !doc.at("unit").is_null()) {
    std::vector<CycScalar> u;
    for (const Json& c : doc.at("unit"))
      u.push_back(CycScalar::parse(c.get<std::string>(), f));
    if (static_cast<int>(u.size()) != d)
      fail("BadDocument", "unit coordinate count does not match the basis");
    unit = std::move(u);
  }
  return std::make_shared<GradedAlgebra>(f, g, names, degs, mul, unit);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("BadDocument", "cannot open '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    fail("BadDocument", std::string("invalid JSON in '") + path + "': " + e.what());
  }
  return doc;
}

}  // namespace gpi
