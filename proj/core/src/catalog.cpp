#include "aisr/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "table_data.hpp"

namespace aisr {

namespace {

using nlohmann::json;

CayleyTable two_element(std::initializer_list<Element> cells) {
  return CayleyTable(2, std::vector<Element>(cells));
}

Semiring make(std::string name, CayleyTable add, CayleyTable mul) {
  Semiring s;
  s.name = std::move(name);
  s.add = std::move(add);
  s.mul = std::move(mul);
  return s;
}

Semiring renamed(Semiring s, std::string name) {
  s.name = std::move(name);
  return s;
}

Congruence congruence_from_blocks(const Semiring& s,
                                  const std::vector<std::vector<int>>& blocks_one_based) {
  Congruence c;
  c.block_of.assign(s.order(), -1);
  for (const auto& blk : blocks_one_based) {
    std::vector<int> b;
    for (int e : blk) b.push_back(e - 1);
    std::sort(b.begin(), b.end());
    for (int e : b) c.block_of[e] = static_cast<int>(c.blocks.size());
    c.blocks.push_back(std::move(b));
  }
  return c;
}

}  // namespace

CayleyTable figure_add() {
  return CayleyTable(4, std::vector<Element>(detail::kFigureAdd, detail::kFigureAdd + 16));
}

const std::vector<int>& numbered_ids() {
  static const std::vector<int> ids(detail::kCatalogIds,
                                    detail::kCatalogIds + detail::kCatalogCount);
  return ids;
}

std::string numbered_name(int id) {
  return "S_(4," + std::to_string(id) + ")";
}

const Semiring* Registry::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.semiring.name == name) return &e.semiring;
  return nullptr;
}

const Semiring& Registry::get(const std::string& name) const {
  const Semiring* s = find(name);
  if (!s) throw DataError("unknown semiring: " + name);
  return *s;
}

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.semiring.name);
  return out;
}

void Registry::add(CatalogEntry entry) { entries_.push_back(std::move(entry)); }

const std::vector<std::string>& Registry::unresolved_names() {
  static const std::vector<std::string> names = {
      "S_6",  "S_7",  "S_18", "S_19", "S_21", "S_22", "S_23", "S_27", "S_28",
      "S_29", "S_30", "S_44", "S_46", "S_47", "S_55", "S_58", "S_61"};
  return names;
}

Registry Registry::builtin() {
  Registry r;
  const CayleyTable add = figure_add();
  for (int i = 0; i < detail::kCatalogCount; ++i) {
    CayleyTable mul(4, std::vector<Element>(detail::kCatalogMul[i], detail::kCatalogMul[i] + 16));
    r.add({make(numbered_name(detail::kCatalogIds[i]), add, mul), "table"});
  }

  const CayleyTable join2 = two_element({0, 1, 1, 1});
  r.add({make("L_2", join2, two_element({0, 0, 1, 1})), "definition: xy = x"});
  r.add({make("R_2", join2, two_element({0, 1, 0, 1})), "definition: xy = y"});
  r.add({make("M_2", join2, two_element({0, 1, 1, 1})), "definition: xy = x + y"});
  r.add({make("D_2", join2, two_element({0, 0, 0, 1})), "definition: xy = meet"});
  r.add({make("N_2", join2, two_element({0, 0, 0, 0})), "definition: xy = bottom"});
  r.add({make("T_2", join2, two_element({1, 1, 1, 1})), "definition: xy = top"});

  struct SubRecipe {
    const char* name;
    int host;
    std::vector<int> subset;
  };
  struct QuotRecipe {
    const char* name;
    int host;
    std::vector<std::vector<int>> blocks;
  };
  const SubRecipe subs[] = {
      {"S_2", 277, {1, 3, 4}},  {"S_4", 281, {1, 3, 4}},  {"S_54", 360, {1, 2, 4}},
      {"S_56", 363, {1, 2, 4}}, {"S_57", 360, {1, 2, 3}}, {"S_59", 366, {1, 2, 3}},
      {"S_60", 368, {1, 2, 4}},
  };
  const QuotRecipe quots[] = {
      {"S_10", 285, {{1, 2}, {3}, {4}}},
      {"S_53", 357, {{1, 4}, {2}, {3}}},
  };
  std::vector<CatalogEntry> derived;
  for (const auto& rec : subs) {
    const Semiring& host = r.get(numbered_name(rec.host));
    std::ostringstream prov;
    prov << "subalgebra {";
    for (std::size_t i = 0; i < rec.subset.size(); ++i)
      prov << (i ? "," : "") << rec.subset[i];
    prov << "} of " << host.name;
    derived.push_back({renamed(subalgebra(host, rec.subset), rec.name), prov.str()});
  }
  for (const auto& rec : quots) {
    const Semiring& host = r.get(numbered_name(rec.host));
    Congruence theta = congruence_from_blocks(host, rec.blocks);
    derived.push_back({renamed(quotient(host, theta), rec.name),
                       "quotient of " + host.name + " by " + theta.to_string()});
  }
  std::sort(derived.begin(), derived.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    auto num = [](const std::string& n) { return std::stoi(n.substr(2)); };
    return num(a.semiring.name) < num(b.semiring.name);
  });
  for (auto& e : derived) r.add(std::move(e));
  return r;
}

namespace {

json table_to_json(const CayleyTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return rows;
}

CayleyTable table_from_json(const json& j, int order, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != order)
    throw DataError(what + ": expected " + std::to_string(order) + " rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw DataError(what + ": expected square table of order " + std::to_string(order));
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw DataError(what + ": non-integer entry");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return CayleyTable::from_rows(rows);
}

}  // namespace

std::string registry_to_json(const Registry& registry) {
  json arr = json::array();
  for (const auto& e : registry.entries()) {
    json obj;
    obj["name"] = e.semiring.name;
    obj["order"] = e.semiring.order();
    obj["add"] = table_to_json(e.semiring.add);
    obj["mul"] = table_to_json(e.semiring.mul);
    obj["provenance"] = e.provenance;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2);
}

Registry registry_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError("catalog JSON parse error at byte " + std::to_string(e.byte) + ": " +
                    e.what());
  }
  if (!doc.is_array()) throw DataError("catalog JSON must be an array of entries");
  Registry r;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& obj = doc[i];
    const std::string where = "entry " + std::to_string(i);
    if (!obj.is_object()) throw DataError(where + ": expected an object");
    for (const char* key : {"name", "order", "add", "mul", "provenance"})
      if (!obj.contains(key)) throw DataError(where + ": missing field '" + key + "'");
    if (!obj["name"].is_string() || !obj["provenance"].is_string())
      throw DataError(where + ": name and provenance must be strings");
    if (!obj["order"].is_number_integer()) throw DataError(where + ": order must be an integer");
    const std::string name = obj["name"].get<std::string>();
    const int order = obj["order"].get<int>();
    if (order < 1) throw DataError(where + ": order must be positive");
    CatalogEntry e;
    e.semiring.name = name;
    e.semiring.add = table_from_json(obj["add"], order, where + " (" + name + ") add");
    e.semiring.mul = table_from_json(obj["mul"], order, where + " (" + name + ") mul");
    e.provenance = obj["provenance"].get<std::string>();
    if (r.find(name)) throw DataError(where + ": duplicate name " + name);
    r.add(std::move(e));
  }
  return r;
}

Registry load_registry(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return registry_from_json(buf.str());
}

void save_registry(const Registry& registry, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write catalog file: " + path);
  out << registry_to_json(registry) << "\n";
}

}  // namespace aisr
