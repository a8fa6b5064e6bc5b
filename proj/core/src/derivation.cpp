#include "aisr/derivation.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "aisr/satisfaction.hpp"

namespace aisr {

namespace {

using Subst = std::map<Var, Word>;

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word scaled(const Word& alpha, const Word& core, const Word& beta) {
  return concat(concat(alpha, core), beta);
}

Word apply_subst(const Word& pattern, const Subst& sigma) {
  Word out;
  for (const auto& v : pattern.letters) {
    auto it = sigma.find(v);
    if (it == sigma.end()) throw DataError("substitution misses variable " + v);
    out.letters.insert(out.letters.end(), it->second.letters.begin(), it->second.letters.end());
  }
  return out;
}

// to == (from \ A) ∪ B ∪ E for some E ⊆ A, with A inside from.
bool rewrite_matches(const Term& from, const Term& to, const std::vector<Word>& a,
                     const std::vector<Word>& b) {
  for (const auto& w : a)
    if (!from.contains(w)) return false;
  std::vector<Word> lower;
  for (const auto& w : from.summands()) {
    bool in_a = std::find(a.begin(), a.end(), w) != a.end();
    if (!in_a) lower.push_back(w);
  }
  lower.insert(lower.end(), b.begin(), b.end());
  const Term need(lower);
  for (const auto& w : need.summands())
    if (!to.contains(w)) return false;
  for (const auto& w : to.summands()) {
    if (from.contains(w)) continue;
    if (std::find(b.begin(), b.end(), w) == b.end()) return false;
  }
  return true;
}

// All ways to match a pattern word against a target, extending sigma;
// variables bind to nonempty words.
void match_word(const std::vector<Var>& pat, std::size_t pi, const std::vector<Var>& target,
                std::size_t ti, Subst& sigma, std::vector<Subst>& out) {
  if (pi == pat.size()) {
    if (ti == target.size()) out.push_back(sigma);
    return;
  }
  const Var& v = pat[pi];
  auto it = sigma.find(v);
  if (it != sigma.end()) {
    const auto& img = it->second.letters;
    if (ti + img.size() <= target.size() &&
        std::equal(img.begin(), img.end(), target.begin() + ti))
      match_word(pat, pi + 1, target, ti + img.size(), sigma, out);
    return;
  }
  const std::size_t rest = pat.size() - pi - 1;
  for (std::size_t len = 1; ti + len + rest <= target.size(); ++len) {
    sigma[v] = Word{std::vector<Var>(target.begin() + ti, target.begin() + ti + len)};
    match_word(pat, pi + 1, target, ti + len, sigma, out);
  }
  sigma.erase(v);
}

bool starts_with(const Word& w, const Word& prefix) {
  return prefix.length() <= w.length() &&
         std::equal(prefix.letters.begin(), prefix.letters.end(), w.letters.begin());
}

bool ends_with(const Word& w, const Word& suffix) {
  return suffix.length() <= w.length() &&
         std::equal(suffix.letters.rbegin(), suffix.letters.rend(), w.letters.rbegin());
}

// Matches every pattern summand as alpha·σ(p)·beta against some summand of
// state (repetition allowed), collecting complete substitutions.
void match_pattern(const std::vector<Word>& pats, std::size_t i, const Term& state,
                   const Word& alpha, const Word& beta, Subst& sigma,
                   std::vector<Subst>& out, std::size_t cap) {
  if (out.size() >= cap) return;
  if (i == pats.size()) {
    out.push_back(sigma);
    return;
  }
  for (const auto& t : state.summands()) {
    if (!starts_with(t, alpha) || !ends_with(t, beta)) continue;
    if (t.length() < alpha.length() + beta.length() + 1) continue;
    std::vector<Var> core(t.letters.begin() + alpha.length(), t.letters.end() - beta.length());
    std::vector<Subst> partial;
    match_word(pats[i].letters, 0, core, 0, sigma, partial);
    for (auto& s : partial) {
      match_pattern(pats, i + 1, state, alpha, beta, s, out, cap);
      if (out.size() >= cap) return;
    }
  }
}

std::vector<Var> side_vars(const Term& t) {
  std::set<Var> vars;
  for (const auto& w : t.summands())
    for (const auto& l : w.letters) vars.insert(l);
  return {vars.begin(), vars.end()};
}

const Identity* find_rule(const std::vector<std::pair<std::string, Identity>>& basis,
                          const std::string& tag) {
  for (const auto& [t, id] : basis)
    if (t == tag) return &id;
  return nullptr;
}

}  // namespace

StepReport check_step(const Term& from, const Term& to, const ProofStep& step,
                      const std::vector<std::pair<std::string, Identity>>& basis) {
  if (step.mode == StepMode::Exact) {
    if (step.rule == "AI") {
      if (from == to) return {true, "sides are equal as summand sets"};
      return {false, "AI step changes the summand set"};
    }
    const Identity* rule = find_rule(basis, step.rule);
    if (!rule) return {false, "unknown rule tag: " + step.rule};
    std::vector<Word> l, r;
    try {
      for (const auto& w : rule->lhs.summands()) l.push_back(apply_subst(w, step.subst));
      for (const auto& w : rule->rhs.summands()) r.push_back(apply_subst(w, step.subst));
    } catch (const DataError& e) {
      return {false, e.what()};
    }
    // Candidate contexts come from occurrences of an instance word inside
    // the summands of `from`.
    std::set<std::pair<std::vector<Var>, std::vector<Var>>> contexts;
    contexts.insert({{}, {}});
    for (const Word& probe : {l[0], r[0]}) {
      for (const auto& w : from.summands()) {
        if (probe.length() > w.length()) continue;
        for (std::size_t i = 0; i + probe.length() <= w.length(); ++i) {
          if (!std::equal(probe.letters.begin(), probe.letters.end(), w.letters.begin() + i))
            continue;
          contexts.insert({{w.letters.begin(), w.letters.begin() + i},
                           {w.letters.begin() + i + probe.length(), w.letters.end()}});
        }
      }
    }
    for (const auto& [av, bv] : contexts) {
      Word alpha{av}, beta{bv};
      std::vector<Word> a, b;
      for (const auto& w : l) a.push_back(scaled(alpha, w, beta));
      for (const auto& w : r) b.push_back(scaled(alpha, w, beta));
      if (rewrite_matches(from, to, a, b)) return {true, "rule " + step.rule + " applies"};
      if (rewrite_matches(from, to, b, a))
        return {true, "rule " + step.rule + " applies (reversed)"};
    }
    return {false, "no context makes rule " + step.rule + " carry the step"};
  }

  // Search mode: bounded bidirectional rewriting.
  std::vector<const std::pair<std::string, Identity>*> rules;
  {
    std::string spec = step.rule;
    if (spec.empty() || spec == "*") {
      for (const auto& r : basis) rules.push_back(&r);
    } else {
      std::stringstream ss(spec);
      std::string tag;
      while (std::getline(ss, tag, ',')) {
        const Identity* rule = find_rule(basis, tag);
        if (!rule) return {false, "unknown rule tag: " + tag};
        for (const auto& r : basis)
          if (r.first == tag) rules.push_back(&r);
      }
    }
  }
  // Candidate images for variables that occur only on the replacement side.
  std::vector<Word> pool;
  {
    std::set<std::vector<Var>> seen;
    for (const Term* t : {&to, &from})
      for (const auto& w : t->summands())
        for (std::size_t i = 0; i < w.length(); ++i)
          for (std::size_t j = i + 1; j <= w.length() && j - i <= 4; ++j)
            seen.insert({w.letters.begin() + i, w.letters.begin() + j});
    for (const auto& v : seen) pool.push_back(Word{v});
    std::sort(pool.begin(), pool.end(), word_less);
    if (pool.size() > 48) pool.resize(48);
  }

  std::set<Term> visited{from};
  std::deque<std::pair<Term, int>> queue{{from, 0}};
  const std::size_t visit_cap = 20000;
  while (!queue.empty()) {
    auto [state, depth] = queue.front();
    queue.pop_front();
    if (state == to) return {true, "search reached the target at depth " + std::to_string(depth)};
    if (depth == step.depth) continue;
    // Shared contexts for this state.
    std::set<std::pair<std::vector<Var>, std::vector<Var>>> contexts;
    contexts.insert({{}, {}});
    for (const auto& w : state.summands())
      for (std::size_t i = 0; i < w.length(); ++i)
        for (std::size_t j = i + 1; j <= w.length(); ++j) {
          contexts.insert({{w.letters.begin(), w.letters.begin() + i},
                           {w.letters.begin() + j, w.letters.end()}});
        }
    auto expand = [&](const Term& pattern, const Term& replacement) {
      for (const auto& [av, bv] : contexts) {
        Word alpha{av}, beta{bv};
        Subst sigma;
        std::vector<Subst> matches;
        match_pattern(pattern.summands(), 0, state, alpha, beta, sigma, matches, 64);
        for (const auto& m : matches) {
          // Enumerate images for replacement-only variables.
          std::vector<Var> free;
          for (const auto& v : side_vars(replacement))
            if (!m.count(v)) free.push_back(v);
          if (free.size() > 2) continue;
          std::vector<Subst> full{m};
          for (const auto& v : free) {
            std::vector<Subst> next;
            for (const auto& s : full)
              for (const auto& img : pool) {
                Subst e = s;
                e[v] = img;
                next.push_back(std::move(e));
              }
            full = std::move(next);
          }
          for (const auto& s : full) {
            std::vector<Word> a, b;
            for (const auto& w : pattern.summands()) a.push_back(scaled(alpha, apply_subst(w, s), beta));
            for (const auto& w : replacement.summands())
              b.push_back(scaled(alpha, apply_subst(w, s), beta));
            std::sort(a.begin(), a.end(), word_less);
            a.erase(std::unique(a.begin(), a.end()), a.end());
            const std::size_t keep_limit = a.size() <= 4 ? (std::size_t{1} << a.size()) : 2;
            for (std::size_t mask = 0; mask < keep_limit; ++mask) {
              std::vector<Word> words;
              for (const auto& w : state.summands())
                if (std::find(a.begin(), a.end(), w) == a.end()) words.push_back(w);
              if (a.size() <= 4) {
                for (std::size_t i = 0; i < a.size(); ++i)
                  if ((mask >> i) & 1) words.push_back(a[i]);
              } else if (mask == 1) {
                words.insert(words.end(), a.begin(), a.end());
              }
              words.insert(words.end(), b.begin(), b.end());
              Term next(words);
              if (visited.count(next) || visited.size() >= visit_cap) continue;
              visited.insert(next);
              queue.emplace_back(next, depth + 1);
            }
          }
        }
      }
    };
    for (const auto* r : rules) {
      expand(r->second.lhs, r->second.rhs);
      expand(r->second.rhs, r->second.lhs);
    }
  }
  return {false, "needs manual expansion: search did not reach the target within depth " +
                     std::to_string(step.depth)};
}

ChainReport check_chain(const ProofChain& chain, const Registry& registry) {
  ChainReport report;
  if (chain.terms.size() < 2 || chain.steps.size() + 1 != chain.terms.size()) {
    report.detail = "chain must have n terms and n-1 steps";
    return report;
  }
  const Semiring* model = registry.find(chain.semiring);
  if (!model) {
    report.detail = "unknown semiring: " + chain.semiring;
    return report;
  }
  bool all_ok = true;
  std::string first_fail;
  for (std::size_t i = 0; i + 1 < chain.terms.size(); ++i) {
    StepReport sr = check_step(chain.terms[i], chain.terms[i + 1], chain.steps[i], chain.basis);
    if (sr.ok) {
      Verdict v = satisfies(*model, Identity{chain.terms[i], chain.terms[i + 1]});
      if (!v.holds) {
        sr.ok = false;
        sr.detail += "; but the model refutes the step: " + v.counterexample->to_string();
      }
    }
    if (!sr.ok && all_ok) {
      all_ok = false;
      first_fail = "step " + std::to_string(i + 1) + ": " + sr.detail;
    }
    report.steps.push_back(std::move(sr));
  }
  report.ok = all_ok;
  report.detail = all_ok ? "ok" : first_fail;
  return report;
}

namespace {

ProofStep exact_step(const std::string& rule,
                     std::initializer_list<std::pair<const char*, const char*>> subst) {
  ProofStep s;
  s.rule = rule;
  s.mode = StepMode::Exact;
  for (const auto& [v, img] : subst) s.subst[v] = parse_term(img).summands()[0];
  return s;
}

ProofStep search_step(const std::string& rules, int depth) {
  ProofStep s;
  s.rule = rules;
  s.mode = StepMode::Search;
  s.depth = depth;
  return s;
}

ProofChain make_chain(std::string name, std::string semiring,
                      std::initializer_list<std::pair<const char*, const char*>> basis,
                      std::initializer_list<const char*> terms,
                      std::vector<ProofStep> steps) {
  ProofChain c;
  c.name = std::move(name);
  c.semiring = std::move(semiring);
  for (const auto& [tag, id] : basis) c.basis.emplace_back(tag, parse_identity(id));
  for (const char* t : terms) c.terms.push_back(parse_term(t));
  c.steps = std::move(steps);
  return c;
}

}  // namespace

std::vector<ProofChain> builtin_proof_corpus() {
  std::vector<ProofChain> out;

  const std::initializer_list<std::pair<const char*, const char*>> basis281 = {
      {"281.1", "x^2y = xy"},
      {"281.2", "x^2y^2 = x^2 + y^2"},
      {"281.3", "x + y^2 = x + xy^2"},
      {"281.4", "x + yz = x + yz + yx"},
      {"281.5", "x^2 + yz = x^2 + yz + xy"}};
  const std::initializer_list<std::pair<const char*, const char*>> basis277 = {
      {"277.1", "xy = x^2 + y^2"},
      {"277.2", "x + x^2 = x + x^3"},
      {"277.3", "x1x2x3 = x1x2x3 + y1y2"}};
  const std::initializer_list<std::pair<const char*, const char*>> basis379 = {
      {"379.1", "xy = yx"},
      {"379.2", "xy = x^2y + xy^2"},
      {"379.3", "xy = xy + xyz"},
      {"379.4", "x + yz = x + yz + xz"}};
  const std::initializer_list<std::pair<const char*, const char*>> basis372 = {
      {"372.1", "xy = x^2 + y^2"},
      {"372.2", "x1x2x3 = x1x2x3 + y"},
      {"372.3", "x + xy = x + xy + y"}};
  const std::initializer_list<std::pair<const char*, const char*>> basis385 = {
      {"385.1", "xy = yx"},
      {"385.2", "x^2 = x^2 + xy"},
      {"385.3", "xy = xy + x1x2x3"},
      {"385.4", "x1x2x3 + y1 = x1x2x3 + y1 + y1y2"}};

  out.push_back(make_chain(
      "281-collapse-square", "S_(4,281)", basis281,
      {"xyz", "x^2yz", "x^2y^2z", "y^2x^2z", "yx^2z", "yxz"},
      {exact_step("281.1", {{"x", "x"}, {"y", "yz"}}),
       exact_step("281.1", {{"x", "y"}, {"y", "z"}}),
       search_step("281.2", 2),
       exact_step("281.1", {{"x", "y"}, {"y", "x^2z"}}),
       exact_step("281.1", {{"x", "x"}, {"y", "z"}})}));

  out.push_back(make_chain("379-square-cube", "S_(4,379)", basis379, {"x^2", "x^3"},
                           {exact_step("379.2", {{"x", "x"}, {"y", "x"}})}));

  out.push_back(make_chain("277-commutativity", "S_(4,277)", basis277,
                           {"xy", "x^2 + y^2", "yx"},
                           {exact_step("277.1", {{"x", "x"}, {"y", "y"}}),
                            exact_step("277.1", {{"x", "y"}, {"y", "x"}})}));

  out.push_back(make_chain(
      "277-absorb-short-product", "S_(4,277)", basis277,
      {"xyz + z", "xyz + z + xy"},
      {exact_step("277.3",
                  {{"x1", "x"}, {"x2", "y"}, {"x3", "z"}, {"y1", "x"}, {"y2", "y"}})}));

  out.push_back(make_chain("277-extend-square", "S_(4,277)", basis277,
                           {"x + xy + z", "x + xy + z + x^2 + y^2", "x + xy + z + x^3 + y^2"},
                           {exact_step("277.1", {{"x", "x"}, {"y", "y"}}),
                            exact_step("277.2", {{"x", "x"}})}));

  out.push_back(make_chain(
      "277-cross-products", "S_(4,277)", basis277,
      {"xy + zw", "xy + zw + x^2 + y^2", "xy + zw + x^2 + y^2 + z^2 + w^2",
       "xy + zw + xw + y^2 + z^2", "xy + zw + xw + zy"},
      {exact_step("277.1", {{"x", "x"}, {"y", "y"}}),
       exact_step("277.1", {{"x", "z"}, {"y", "w"}}),
       exact_step("277.1", {{"x", "x"}, {"y", "w"}}),
       exact_step("277.1", {{"x", "z"}, {"y", "y"}})}));

  out.push_back(make_chain("372-absorb-fresh", "S_(4,372)", basis372, {"xyz", "xyz + w"},
                           {exact_step("372.2", {{"x1", "x"}, {"x2", "y"}, {"x3", "z"}, {"y", "w"}})}));

  out.push_back(make_chain(
      "385-swap-grow", "S_(4,385)", basis385,
      {"x + zw", "x + zw + zwx", "x + zw + zwx + xy"},
      {exact_step("385.3", {{"x", "z"}, {"y", "w"}, {"x1", "z"}, {"x2", "w"}, {"x3", "x"}}),
       exact_step("385.4",
                  {{"x1", "z"}, {"x2", "w"}, {"x3", "x"}, {"y1", "x"}, {"y2", "y"}})}));

  return out;
}

namespace {

using nlohmann::json;

json step_to_json(const ProofStep& s) {
  json j;
  j["rule"] = s.rule;
  j["mode"] = s.mode == StepMode::Exact ? "exact" : "search";
  if (s.mode == StepMode::Exact) {
    json subst = json::object();
    for (const auto& [v, w] : s.subst) subst[v] = format_word(w);
    j["subst"] = std::move(subst);
  } else {
    j["depth"] = s.depth;
  }
  return j;
}

ProofStep step_from_json(const json& j) {
  ProofStep s;
  if (!j.contains("rule") || !j["rule"].is_string()) throw DataError("step needs a rule");
  s.rule = j["rule"].get<std::string>();
  std::string mode = j.value("mode", "exact");
  if (mode == "exact")
    s.mode = StepMode::Exact;
  else if (mode == "search")
    s.mode = StepMode::Search;
  else
    throw DataError("unknown step mode: " + mode);
  if (j.contains("subst"))
    for (const auto& [v, img] : j["subst"].items()) {
      Term t = parse_term(img.get<std::string>());
      if (t.size() != 1) throw DataError("substitution image must be a single word");
      s.subst[v] = t.summands()[0];
    }
  s.depth = j.value("depth", 3);
  return s;
}

}  // namespace

std::string chains_to_json(const std::vector<ProofChain>& chains) {
  json arr = json::array();
  for (const auto& c : chains) {
    json j;
    j["name"] = c.name;
    j["semiring"] = c.semiring;
    json basis = json::array();
    for (const auto& [tag, id] : c.basis) basis.push_back({tag, format_identity(id)});
    j["basis"] = std::move(basis);
    json terms = json::array();
    for (const auto& t : c.terms) terms.push_back(format_term(t));
    j["terms"] = std::move(terms);
    json steps = json::array();
    for (const auto& s : c.steps) steps.push_back(step_to_json(s));
    j["steps"] = std::move(steps);
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::vector<ProofChain> chains_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError("chain JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_array()) throw DataError("chain file must hold an array of chains");
  std::vector<ProofChain> out;
  for (const auto& j : doc) {
    ProofChain c;
    c.name = j.value("name", "");
    c.semiring = j.value("semiring", "");
    if (!j.contains("basis") || !j.contains("terms") || !j.contains("steps"))
      throw DataError("chain " + c.name + " needs basis, terms, and steps");
    for (const auto& b : j["basis"]) {
      if (!b.is_array() || b.size() != 2) throw DataError("basis entries are [tag, identity]");
      c.basis.emplace_back(b[0].get<std::string>(), parse_identity(b[1].get<std::string>()));
    }
    for (const auto& t : j["terms"]) c.terms.push_back(parse_term(t.get<std::string>()));
    for (const auto& s : j["steps"]) c.steps.push_back(step_from_json(s));
    if (c.terms.size() < 2 || c.steps.size() + 1 != c.terms.size())
      throw DataError("chain " + c.name + " needs n terms and n-1 steps");
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ProofChain> load_chains(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open chain file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return chains_from_json(buf.str());
}

void save_chains(const std::vector<ProofChain>& chains, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write chain file: " + path);
  out << chains_to_json(chains) << "\n";
}

}  // namespace aisr
