#include "aisr/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace aisr {

CayleyTable::CayleyTable(int order, std::vector<Element> cells)
    : order_(order), cells_(std::move(cells)) {
  if (order_ <= 0 || cells_.size() != static_cast<std::size_t>(order_) * order_)
    throw DataError("table size does not match order");
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw DataError("empty table");
  std::vector<Element> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw DataError("table is not square");
    for (int v : row) {
      if (v < 1 || v > n) throw DataError("table entry out of range");
      cells.push_back(static_cast<Element>(v - 1));
    }
  }
  return CayleyTable(n, std::move(cells));
}

std::vector<std::vector<int>> CayleyTable::rows() const {
  std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) out[a][b] = at(a, b) + 1;
  return out;
}

CayleyTable CayleyTable::transposed() const {
  CayleyTable t = *this;
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t.set(a, b, at(b, a));
  return t;
}

std::string ValidationReport::message() const {
  if (ok) return "ok";
  std::ostringstream os;
  os << law << " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) os << ", ";
    os << witness[i];
  }
  os << ")";
  return os.str();
}

namespace {

ValidationReport fail(std::string law, std::initializer_list<int> w) {
  ValidationReport r;
  r.ok = false;
  r.law = std::move(law);
  for (int e : w) r.witness.push_back(e + 1);
  return r;
}

}  // namespace

ValidationReport validate_axioms(const CayleyTable& add, const CayleyTable& mul) {
  const int n = add.order();
  if (mul.order() != n) throw DataError("operation tables have different orders");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add.at(a, b) >= n || mul.at(a, b) >= n)
        return fail("entry-range", {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add.at(a, b) != add.at(b, a)) return fail("add-commutativity", {a, b});
  for (int a = 0; a < n; ++a)
    if (add.at(a, a) != a) return fail("add-idempotency", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (add.at(add.at(a, b), c) != add.at(a, add.at(b, c)))
          return fail("add-associativity", {a, b, c});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul.at(mul.at(a, b), c) != mul.at(a, mul.at(b, c)))
          return fail("mul-associativity", {a, b, c});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul.at(a, add.at(b, c)) != add.at(mul.at(a, b), mul.at(a, c)))
          return fail("left-distributivity", {a, b, c});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul.at(add.at(a, b), c) != add.at(mul.at(a, c), mul.at(b, c)))
          return fail("right-distributivity", {a, b, c});
  return {};
}

ValidationReport validate_axioms(const Semiring& s) {
  return validate_axioms(s.add, s.mul);
}

namespace {

bool is_homomorphism(const std::vector<Element>& f, const Semiring& s, const Semiring& t) {
  const int n = s.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (f[s.plus(a, b)] != t.plus(f[a], f[b])) return false;
      if (f[s.times(a, b)] != t.times(f[a], f[b])) return false;
    }
  return true;
}

Homomorphism classify(std::vector<Element> f, int target_order) {
  Homomorphism h;
  h.map = std::move(f);
  std::vector<char> hit(target_order, 0);
  for (Element v : h.map) hit[v] = 1;
  int distinct = static_cast<int>(std::count(hit.begin(), hit.end(), 1));
  h.injective = distinct == static_cast<int>(h.map.size());
  h.surjective = distinct == target_order;
  return h;
}

}  // namespace

std::vector<Homomorphism> all_homomorphisms(const Semiring& from, const Semiring& to) {
  const int n = from.order(), m = to.order();
  std::vector<Homomorphism> out;
  std::vector<Element> f(n, 0);
  while (true) {
    if (is_homomorphism(f, from, to)) out.push_back(classify(f, m));
    int i = n - 1;
    while (i >= 0 && f[i] == m - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

std::optional<std::vector<Element>> find_isomorphism(const Semiring& a, const Semiring& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (is_homomorphism(p, a, b)) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

Semiring subalgebra(const Semiring& s, const std::vector<int>& subset_one_based) {
  if (subset_one_based.empty()) throw DataError("empty subset");
  std::vector<int> sub;
  for (int e : subset_one_based) {
    if (e < 1 || e > s.order()) throw DataError("subset element out of range");
    sub.push_back(e - 1);
  }
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  std::vector<int> idx(s.order(), -1);
  for (std::size_t i = 0; i < sub.size(); ++i) idx[sub[i]] = static_cast<int>(i);
  const int k = static_cast<int>(sub.size());
  CayleyTable add(k, std::vector<Element>(static_cast<std::size_t>(k) * k));
  CayleyTable mul = add;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int sum = s.plus(sub[i], sub[j]);
      int prod = s.times(sub[i], sub[j]);
      if (idx[sum] < 0 || idx[prod] < 0)
        throw DataError("subset is not closed under the operations");
      add.set(i, j, static_cast<Element>(idx[sum]));
      mul.set(i, j, static_cast<Element>(idx[prod]));
    }
  Semiring out;
  std::ostringstream name;
  name << s.name << "|{";
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (i) name << ",";
    name << sub[i] + 1;
  }
  name << "}";
  out.name = name.str();
  out.add = std::move(add);
  out.mul = std::move(mul);
  return out;
}

namespace {

Congruence from_rgs(const std::vector<int>& rgs) {
  Congruence c;
  c.block_of = rgs;
  int nb = *std::max_element(rgs.begin(), rgs.end()) + 1;
  c.blocks.resize(nb);
  for (std::size_t e = 0; e < rgs.size(); ++e)
    c.blocks[rgs[e]].push_back(static_cast<int>(e));
  return c;
}

bool respects(const std::vector<int>& blk, const Semiring& s) {
  const int n = s.order();
  for (int a = 0; a < n; ++a)
    for (int a2 = a; a2 < n; ++a2) {
      if (blk[a] != blk[a2]) continue;
      for (int b = 0; b < n; ++b) {
        if (blk[s.plus(a, b)] != blk[s.plus(a2, b)]) return false;
        if (blk[s.plus(b, a)] != blk[s.plus(b, a2)]) return false;
        if (blk[s.times(a, b)] != blk[s.times(a2, b)]) return false;
        if (blk[s.times(b, a)] != blk[s.times(b, a2)]) return false;
      }
    }
  return true;
}

void rgs_walk(std::vector<int>& rgs, int pos, int used, const Semiring& s,
              std::vector<Congruence>& out) {
  const int n = s.order();
  if (pos == n) {
    if (respects(rgs, s)) out.push_back(from_rgs(rgs));
    return;
  }
  for (int b = 0; b <= used; ++b) {
    rgs[pos] = b;
    rgs_walk(rgs, pos + 1, std::max(used, b + 1), s, out);
  }
}

}  // namespace

std::string Congruence::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << "|";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) os << ",";
      os << blocks[i][j] + 1;
    }
  }
  os << "}";
  return os.str();
}

std::vector<Congruence> congruences(const Semiring& s) {
  if (s.order() > 6) throw DataError("congruence enumeration is limited to order 6");
  std::vector<Congruence> out;
  std::vector<int> rgs(s.order(), 0);
  rgs_walk(rgs, 1, 1, s, out);
  return out;
}

Semiring quotient(const Semiring& s, const Congruence& theta) {
  const int k = static_cast<int>(theta.size());
  CayleyTable add(k, std::vector<Element>(static_cast<std::size_t>(k) * k));
  CayleyTable mul = add;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int a = theta.blocks[i][0], b = theta.blocks[j][0];
      add.set(i, j, static_cast<Element>(theta.block_of[s.plus(a, b)]));
      mul.set(i, j, static_cast<Element>(theta.block_of[s.times(a, b)]));
    }
  Semiring out;
  out.name = s.name + "/" + theta.to_string();
  out.add = std::move(add);
  out.mul = std::move(mul);
  return out;
}

std::optional<SubdirectWitness> subdirect_witness(const Semiring& s,
                                                  const Semiring& a,
                                                  const Semiring& b) {
  auto thetas = congruences(s);
  auto meets_trivially = [&](const Congruence& t1, const Congruence& t2) {
    const int n = s.order();
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (t1.block_of[x] == t1.block_of[y] && t2.block_of[x] == t2.block_of[y])
          return false;
    return true;
  };
  for (const auto& t1 : thetas) {
    if (t1.size() != static_cast<std::size_t>(a.order())) continue;
    if (!find_isomorphism(quotient(s, t1), a)) continue;
    for (const auto& t2 : thetas) {
      if (t2.size() != static_cast<std::size_t>(b.order())) continue;
      if (!meets_trivially(t1, t2)) continue;
      if (!find_isomorphism(quotient(s, t2), b)) continue;
      return SubdirectWitness{t1, t2};
    }
  }
  return std::nullopt;
}

Semiring dual(const Semiring& s) {
  Semiring d;
  d.name = s.name + "^op";
  d.add = s.add;
  d.mul = s.mul.transposed();
  return d;
}

std::vector<std::vector<Element>> table_automorphisms(const CayleyTable& t) {
  const int n = t.order();
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Element>> out;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (p[t.at(a, b)] != t.at(p[a], p[b])) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace aisr
