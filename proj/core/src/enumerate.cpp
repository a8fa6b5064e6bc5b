#include "aisr/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace aisr {

namespace {

constexpr Element kUnset = 0xFF;

// Partial-table consistency: every fully determined instance of the law
// must hold; instances touching unset cells are skipped.
bool partial_semilattice_ok(const std::vector<Element>& t, int n) {
  auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Element ab = at(a, b);
      if (ab == kUnset) continue;
      for (int c = 0; c < n; ++c) {
        Element bc = at(b, c);
        if (bc == kUnset) continue;
        Element l = at(ab, c), r = at(a, bc);
        if (l == kUnset || r == kUnset) continue;
        if (l != r) return false;
      }
    }
  return true;
}

std::vector<Element> permuted_table(const std::vector<Element>& t, int n,
                                    const std::vector<Element>& p) {
  std::vector<Element> out(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[static_cast<std::size_t>(p[a]) * n + p[b]] =
          p[t[static_cast<std::size_t>(a) * n + b]];
  return out;
}

void semilattice_walk(std::vector<Element>& t, int n, const std::vector<std::pair<int, int>>& cells,
                      std::size_t next, std::set<std::vector<Element>>& canon) {
  if (next == cells.size()) {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Element> best = t;
    do {
      best = std::min(best, permuted_table(t, n, p));
    } while (std::next_permutation(p.begin(), p.end()));
    canon.insert(std::move(best));
    return;
  }
  auto [a, b] = cells[next];
  for (Element v = 0; v < n; ++v) {
    t[static_cast<std::size_t>(a) * n + b] = v;
    t[static_cast<std::size_t>(b) * n + a] = v;
    if (partial_semilattice_ok(t, n)) semilattice_walk(t, n, cells, next + 1, canon);
  }
  t[static_cast<std::size_t>(a) * n + b] = kUnset;
  t[static_cast<std::size_t>(b) * n + a] = kUnset;
}

}  // namespace

std::vector<CayleyTable> enumerate_semilattices(int order) {
  if (order < 1 || order > 5) throw DataError("semilattice enumeration is limited to order 5");
  const int n = order;
  std::vector<Element> t(static_cast<std::size_t>(n) * n, kUnset);
  for (int a = 0; a < n; ++a) t[static_cast<std::size_t>(a) * n + a] = static_cast<Element>(a);
  std::vector<std::pair<int, int>> cells;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) cells.emplace_back(a, b);
  std::set<std::vector<Element>> canon;
  semilattice_walk(t, n, cells, 0, canon);
  std::vector<CayleyTable> out;
  for (const auto& c : canon) out.emplace_back(n, c);
  return out;
}

namespace {

struct MulSearch {
  const CayleyTable& add;
  int n;
  std::vector<Element> mul;
  std::vector<std::vector<Element>> autos;
  std::set<std::vector<Element>>* canon;

  Element at(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }

  bool partial_ok() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Element ab = at(a, b);
        if (ab == kUnset) continue;
        for (int c = 0; c < n; ++c) {
          Element bc = at(b, c);
          if (bc != kUnset && at(ab, c) != kUnset && at(a, bc) != kUnset &&
              at(ab, c) != at(a, bc))
            return false;
        }
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          Element lbc = at(a, add.at(b, c));
          Element lab = at(a, b), lac = at(a, c);
          if (lbc != kUnset && lab != kUnset && lac != kUnset && lbc != add.at(lab, lac))
            return false;
          Element rbc = at(add.at(b, c), a);
          Element rba = at(b, a), rca = at(c, a);
          if (rbc != kUnset && rba != kUnset && rca != kUnset && rbc != add.at(rba, rca))
            return false;
        }
    return true;
  }

  void walk(std::size_t cell) {
    if (cell == mul.size()) {
      std::vector<Element> best = mul;
      for (const auto& p : autos) best = std::min(best, permuted_table(mul, n, p));
      canon->insert(std::move(best));
      return;
    }
    for (Element v = 0; v < n; ++v) {
      mul[cell] = v;
      if (partial_ok()) walk(cell + 1);
    }
    mul[cell] = kUnset;
  }
};

}  // namespace

std::vector<IsoClass> enumerate_ai_semirings(const CayleyTable& add) {
  const int n = add.order();
  if (n > 5) throw DataError("semiring enumeration is limited to order 5");
  std::set<std::vector<Element>> canon;
  MulSearch s{add, n, std::vector<Element>(static_cast<std::size_t>(n) * n, kUnset),
              table_automorphisms(add), &canon};
  s.walk(0);
  std::vector<IsoClass> out;
  for (const auto& c : canon) {
    IsoClass cls;
    cls.mul = CayleyTable(n, c);
    std::set<std::vector<Element>> orbit;
    for (const auto& p : s.autos) orbit.insert(permuted_table(c, n, p));
    cls.orbit_size = static_cast<int>(orbit.size());
    out.push_back(std::move(cls));
  }
  return out;
}

int count_ai_semirings(int order) {
  int total = 0;
  for (const auto& add : enumerate_semilattices(order))
    total += static_cast<int>(enumerate_ai_semirings(add).size());
  return total;
}

MatchReport match_catalog(const std::vector<IsoClass>& classes, const CayleyTable& add,
                          const Registry& registry) {
  const int n = add.order();
  const auto autos = table_automorphisms(add);
  std::map<std::vector<Element>, int> canon_to_class;
  for (std::size_t i = 0; i < classes.size(); ++i)
    canon_to_class[classes[i].mul.cells()] = static_cast<int>(i);

  MatchReport report;
  std::vector<int> matched_class(classes.size(), 0);
  for (const auto& entry : registry.entries()) {
    if (entry.semiring.order() != n || !(entry.semiring.add == add)) continue;
    std::vector<Element> canon = entry.semiring.mul.cells();
    for (const auto& p : autos)
      canon = std::min(canon, permuted_table(entry.semiring.mul.cells(), n, p));
    auto it = canon_to_class.find(canon);
    if (it == canon_to_class.end()) {
      report.unmatched_names.push_back(entry.semiring.name);
      continue;
    }
    if (matched_class[it->second]) {
      report.duplicate_names.push_back(entry.semiring.name);
      continue;
    }
    matched_class[it->second] = 1;
    MatchReport::Row row;
    row.class_index = it->second;
    row.name = entry.semiring.name;
    for (const auto& p : autos)
      if (permuted_table(classes[it->second].mul.cells(), n, p) == entry.semiring.mul.cells()) {
        row.iso = p;
        break;
      }
    report.matches.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (!matched_class[i]) report.unmatched_classes.push_back(static_cast<int>(i));
  return report;
}

}  // namespace aisr
