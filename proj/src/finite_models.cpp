#include "metalogic/finite_models.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <unordered_map>

#include "metalogic/sexpr.hpp"

namespace metalogic {

namespace {

std::string hf_name(unsigned code) {
  std::string s = "{";
  bool first = true;
  for (unsigned i = 0; (1u << i) <= code; ++i)
    if (code & (1u << i)) {
      if (!first) s += ',';
      s += hf_name(i);
      first = false;
    }
  return s + "}";
}

int require_in(const FiniteModel& m) {
  auto it = m.relation_arity.find("in");
  if (it == m.relation_arity.end() || it->second != 2)
    throw ModelError("model lacks the binary relation 'in'");
  return 0;
}

}  // namespace

FiniteModel build_hf(int r) {
  if (r < 1 || r > kMaxHfRank)
    throw ModelError("hereditarily finite rank must be between 1 and " + std::to_string(kMaxHfRank));
  // V_1 = {0}; V_{k+1} = subsets of V_k coded as bit sets.
  unsigned count = 1;
  for (int k = 1; k < r; ++k) count = 1u << count;
  FiniteModel m;
  for (unsigned c = 0; c < count; ++c) m.universe.push_back(hf_name(c));
  m.add_relation("in", 2);
  for (unsigned x = 0; x < count; ++x)
    for (unsigned y = 0; y < count; ++y)
      if (x < 32 && (y >> x) & 1u)
        m.relations["in"].insert({static_cast<int>(x), static_cast<int>(y)});
  return m;
}

AsReport check_as(const FiniteModel& m) {
  require_in(m);
  const int n = m.size();
  const auto& in = m.relations.at("in");
  auto mem = [&](int a, int b) { return in.count({a, b}) > 0; };
  AsReport r;
  for (int x = 0; x < n && !r.as1_witness; ++x) {
    bool empty = true;
    for (int y = 0; y < n && empty; ++y) empty = !mem(y, x);
    if (empty) r.as1_witness = x;
  }
  r.as1 = r.as1_witness.has_value();
  r.as2 = true;
  for (int x = 0; x < n && r.as2; ++x)
    for (int y = 0; y < n && r.as2; ++y) {
      bool found = false;
      for (int z = 0; z < n && !found; ++z) {
        bool ok = true;
        for (int w = 0; w < n && ok; ++w) ok = mem(w, z) == (mem(w, x) || w == y);
        found = ok;
      }
      if (!found) {
        r.as2 = false;
        r.as2_counterexample = {x, y};
      }
    }
  r.ext = true;
  for (int x = 0; x < n && r.ext; ++x)
    for (int y = x + 1; y < n && r.ext; ++y) {
      bool same = true;
      for (int w = 0; w < n && same; ++w) same = mem(w, x) == mem(w, y);
      if (same) {
        r.ext = false;
        r.ext_counterexample = {x, y};
      }
    }
  return r;
}

Formula as1_sentence() {
  return parse_formula("(exists x (forall y (not (in y x))))", Signature::membership());
}

Formula as2_sentence() {
  return parse_formula(
      "(forall x (forall y (exists z (forall w (iff (in w z) (or (in w x) (= w y)))))))",
      Signature::membership());
}

Formula ext_sentence() {
  return parse_formula("(forall x (forall y (implies (forall w (iff (in w x) (in w y))) (= x y))))",
                       Signature::membership());
}

Json to_json(const AsReport& r, const FiniteModel& m) {
  auto name = [&](int e) { return m.universe[static_cast<std::size_t>(e)]; };
  Json j;
  j["as1"] = {{"holds", r.as1}};
  if (r.as1_witness) j["as1"]["witness"] = name(*r.as1_witness);
  j["as2"] = {{"holds", r.as2}};
  if (r.as2_counterexample)
    j["as2"]["counterexample"] = {{"x", name(r.as2_counterexample->first)},
                                  {"y", name(r.as2_counterexample->second)}};
  j["ext"] = {{"holds", r.ext}};
  if (r.ext_counterexample)
    j["ext"]["counterexample"] = {{"x", name(r.ext_counterexample->first)},
                                  {"y", name(r.ext_counterexample->second)}};
  return j;
}

FiniteModel disjoint_union(const FiniteModel& a, const FiniteModel& b) {
  for (const FiniteModel* m : {&a, &b})
    if (!m->functions.empty() || !m->constants.empty() || !m->coded.empty())
      throw ModelError("disjoint union needs relational models");
  if (a.relation_arity != b.relation_arity)
    throw ModelError("disjoint union needs models over the same signature");
  FiniteModel u;
  for (const auto& e : a.universe) u.universe.push_back("0:" + e);
  for (const auto& e : b.universe) u.universe.push_back("1:" + e);
  const int shift = a.size();
  for (const auto& [r, arity] : a.relation_arity) {
    u.add_relation(r, arity);
    for (const auto& t : a.relations.at(r)) u.relations[r].insert(t);
    for (auto t : b.relations.at(r)) {
      for (int& e : t) e += shift;
      u.relations[r].insert(t);
    }
  }
  return u;
}

AutomorphismReport automorphisms(const FiniteModel& m) {
  const int n = m.size();
  if (n > kMaxSearchUniverse)
    throw ModelError("automorphism search needs at most " + std::to_string(kMaxSearchUniverse) +
                     " elements");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  auto image = [&](std::vector<int> t) {
    for (int& e : t) e = p[static_cast<std::size_t>(e)];
    return t;
  };
  AutomorphismReport rep;
  do {
    bool ok = true;
    for (const auto& [c, v] : m.constants) ok = ok && p[static_cast<std::size_t>(v)] == v;
    for (auto it = m.relations.begin(); ok && it != m.relations.end(); ++it)
      for (const auto& t : it->second)
        if (!it->second.count(image(t))) {
          ok = false;
          break;
        }
    for (auto it = m.functions.begin(); ok && it != m.functions.end(); ++it)
      for (const auto& [args, v] : it->second)
        if (it->second.at(image(args)) != p[static_cast<std::size_t>(v)]) {
          ok = false;
          break;
        }
    for (auto it = m.coded.begin(); ok && it != m.coded.end(); ++it)
      for (const auto& [c, t] : it->second)
        if (!it->second.count({c, image(t)})) {
          ok = false;
          break;
        }
    if (!ok) continue;
    rep.automorphisms.push_back(p);
    bool moves_all = true;
    for (int i = 0; i < n; ++i) moves_all = moves_all && p[static_cast<std::size_t>(i)] != i;
    rep.fixpoint_free = rep.fixpoint_free || moves_all;
  } while (std::next_permutation(p.begin(), p.end()));
  return rep;
}

namespace {

// Least-size search over semantic classes. Formulas are identified by
// their truth table over all assignments of `vars` in every model, their
// free-variable set and (optionally) their capped rank; replacing a
// subformula by another of the same class leaves the class of the whole
// unchanged, so one least representative per class suffices.
class ClassSearch {
 public:
  struct TermClass {
    Term term;
    std::vector<std::int8_t> value;
    std::uint32_t fv;
  };
  struct FormulaClass {
    Formula formula;
    std::vector<std::uint64_t> mask;
    std::uint32_t fv;
    RankPair rank;
    std::size_t size;
    std::string text;
  };

  ClassSearch(std::vector<const FiniteModel*> models, std::vector<std::string> vars, unsigned cap)
      : models_(std::move(models)), vars_(std::move(vars)), cap_(cap) {
    if (vars_.empty() || vars_.size() > 3) throw ModelError("the search needs 1 to 3 variables");
    sig_ = models_.front()->signature();
    for (const auto* m : models_) {
      if (m->size() > kMaxSearchUniverse)
        throw ModelError("definability search needs at most " + std::to_string(kMaxSearchUniverse) +
                         " elements");
      if (!(m->signature() == sig_)) throw ModelError("models have different signatures");
      for (const auto& v : vars_)
        if (sig_.declares(v)) throw ModelError("variable '" + v + "' clashes with a symbol");
      Block b;
      b.n = m->size();
      b.offset = total_;
      b.count = 1;
      for (std::size_t i = 0; i < vars_.size(); ++i) b.count *= b.n;
      total_ += b.count;
      blocks_.push_back(b);
    }
    words_ = (total_ + 63) / 64;
  }

  std::size_t total() const { return total_; }
  int block_offset(std::size_t b) const { return blocks_[b].offset; }

  void run(std::size_t max_size) {
    terms_.assign(max_size + 1, {});
    forms_.assign(max_size + 1, {});
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      std::vector<std::int8_t> val(total_);
      for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (int a = 0; a < blocks_[b].count; ++a)
          val[static_cast<std::size_t>(blocks_[b].offset + a)] =
              static_cast<std::int8_t>(digit(b, a, i));
      add_term(0, Term::variable(vars_[i]), std::move(val), 1u << i);
    }
    for (std::size_t s = 1; s <= max_size; ++s) {
      if (s == 1)
        for (const auto& c : sig_.constants) {
          std::vector<std::int8_t> val(total_);
          for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (int a = 0; a < blocks_[b].count; ++a)
              val[static_cast<std::size_t>(blocks_[b].offset + a)] =
                  static_cast<std::int8_t>(models_[b]->constants.at(c));
          add_term(1, Term::constant(c), std::move(val), 0);
        }
      for (const auto& [fn, arity] : sig_.functions)
        for_each_term_tuple(s - 1, static_cast<std::size_t>(arity), [&](const std::vector<const TermClass*>& args) {
          std::vector<std::int8_t> val(total_);
          std::uint32_t fv = 0;
          std::vector<Term> ts;
          for (const auto* a : args) {
            fv |= a->fv;
            ts.push_back(a->term);
          }
          for (std::size_t b = 0; b < blocks_.size(); ++b) {
            const auto& table = models_[b]->functions.at(fn);
            for (int a = 0; a < blocks_[b].count; ++a) {
              const auto idx = static_cast<std::size_t>(blocks_[b].offset + a);
              std::vector<int> key;
              for (const auto* t : args) key.push_back(t->value[idx]);
              val[idx] = static_cast<std::int8_t>(table.at(key));
            }
          }
          add_term(s, Term::apply(fn, std::move(ts)), std::move(val), fv);
        });
      generate_formulas(s);
    }
  }

  const std::vector<std::vector<FormulaClass>>& formulas() const { return forms_; }

  bool bit(const std::vector<std::uint64_t>& m, std::size_t i) const {
    return (m[i / 64] >> (i % 64)) & 1u;
  }

 private:
  struct Block {
    int n = 0, offset = 0, count = 0;
  };

  int digit(std::size_t b, int a, std::size_t i) const {
    for (std::size_t k = 0; k < i; ++k) a /= blocks_[b].n;
    return a % blocks_[b].n;
  }

  template <class F>
  void for_each_term_tuple(std::size_t total, std::size_t parts, F&& f) {
    std::vector<const TermClass*> acc;
    std::function<void(std::size_t)> rec = [&](std::size_t left) {
      if (acc.size() == parts) {
        if (left == 0) f(acc);
        return;
      }
      for (std::size_t s = 0; s <= left; ++s)
        for (const auto& t : terms_[s]) {
          acc.push_back(&t);
          rec(left - s);
          acc.pop_back();
        }
    };
    rec(total);
  }

  void add_term(std::size_t s, Term t, std::vector<std::int8_t> val, std::uint32_t fv) {
    std::string key(reinterpret_cast<const char*>(val.data()), val.size());
    key.push_back(static_cast<char>(fv));
    if (term_seen_.count(key)) return;
    term_seen_.emplace(std::move(key), s);
    terms_[s].push_back({std::move(t), std::move(val), fv});
  }

  std::string key_of(const std::vector<std::uint64_t>& mask, std::uint32_t fv, RankPair r) const {
    std::string key(reinterpret_cast<const char*>(mask.data()), mask.size() * 8);
    key.push_back(static_cast<char>(fv));
    if (cap_) {
      key.push_back(static_cast<char>(r.sigma));
      key.push_back(static_cast<char>(r.pi));
    }
    return key;
  }

  RankPair capped(RankPair r) const {
    if (!cap_) return {0, 0};
    return {std::min(r.sigma, cap_), std::min(r.pi, cap_)};
  }

  // Candidate builder is only invoked when the class is new or ties on size.
  template <class Build>
  void offer(std::size_t s, std::vector<std::uint64_t> mask, std::uint32_t fv, RankPair r,
             Build&& build) {
    r = capped(r);
    std::string key = key_of(mask, fv, r);
    auto it = seen_.find(key);
    if (it != seen_.end()) {
      auto [size, idx] = it->second;
      if (size < s) return;
      Formula f = build();
      std::string text = render(f);
      auto& cur = pending_[idx];
      if (text < cur.text) {
        cur.formula = std::move(f);
        cur.text = std::move(text);
      }
      return;
    }
    Formula f = build();
    std::string text = render(f);
    seen_.emplace(std::move(key), std::make_pair(s, pending_.size()));
    pending_.push_back({std::move(f), std::move(mask), fv, r, s, std::move(text)});
  }

  std::vector<std::uint64_t> empty_mask() const { return std::vector<std::uint64_t>(words_, 0); }
  static void set_bit(std::vector<std::uint64_t>& m, std::size_t i) { m[i / 64] |= 1ull << (i % 64); }

  void generate_formulas(std::size_t s) {
    pending_.clear();
    // Atoms.
    for (std::size_t a = 0; a <= s - 1; ++a) {
      const std::size_t b = s - 1 - a;
      for (const auto& l : terms_[a])
        for (const auto& r : terms_[b]) {
          auto mask = empty_mask();
          for (std::size_t i = 0; i < total_; ++i)
            if (l.value[i] == r.value[i]) set_bit(mask, i);
          offer(s, std::move(mask), l.fv | r.fv, {1, 1},
                [&] { return Formula::equal(l.term, r.term); });
        }
    }
    for (const auto& [rel, arity] : sig_.relations) {
      if (arity == 0) {
        if (s != 1) continue;
        auto mask = empty_mask();
        for (std::size_t b = 0; b < blocks_.size(); ++b)
          if (models_[b]->relations.at(rel).count({}))
            for (int a = 0; a < blocks_[b].count; ++a)
              set_bit(mask, static_cast<std::size_t>(blocks_[b].offset + a));
        offer(s, std::move(mask), 0, {1, 1}, [&] { return Formula::relation(rel, {}); });
        continue;
      }
      for_each_term_tuple(s - 1, static_cast<std::size_t>(arity), [&](const std::vector<const TermClass*>& args) {
        auto mask = empty_mask();
        std::uint32_t fv = 0;
        for (const auto* t : args) fv |= t->fv;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
          const auto& table = models_[b]->relations.at(rel);
          for (int a = 0; a < blocks_[b].count; ++a) {
            const auto idx = static_cast<std::size_t>(blocks_[b].offset + a);
            std::vector<int> key;
            for (const auto* t : args) key.push_back(t->value[idx]);
            if (table.count(key)) set_bit(mask, idx);
          }
        }
        offer(s, std::move(mask), fv, {1, 1}, [&] {
          std::vector<Term> ts;
          for (const auto* t : args) ts.push_back(t->term);
          return Formula::relation(rel, std::move(ts));
        });
      });
    }
    if (s >= 2) {
      for (const auto& c : forms_[s - 1]) {
        auto neg = empty_mask();
        for (std::size_t w = 0; w < words_; ++w) neg[w] = ~c.mask[w];
        trim(neg);
        offer(s, std::move(neg), c.fv, {c.rank.pi, c.rank.sigma},
              [&] { return Formula::negation(c.formula); });
        for (std::size_t i = 0; i < vars_.size(); ++i) {
          auto [ex, all] = quantify(c.mask, i);
          const std::uint32_t fv = c.fv & ~(1u << i);
          offer(s, std::move(ex), fv, {c.rank.sigma, c.rank.sigma + 1},
                [&] { return Formula::exists(vars_[i], c.formula); });
          offer(s, std::move(all), fv, {c.rank.pi + 1, c.rank.pi},
                [&] { return Formula::forall(vars_[i], c.formula); });
        }
      }
    }
    for (std::size_t a = 1; a + 1 < s; ++a) {
      const std::size_t b = s - 1 - a;
      for (const auto& l : forms_[a])
        for (const auto& r : forms_[b]) {
          auto conj = empty_mask(), disj = empty_mask();
          for (std::size_t w = 0; w < words_; ++w) {
            conj[w] = l.mask[w] & r.mask[w];
            disj[w] = l.mask[w] | r.mask[w];
          }
          const RankPair rk{std::max(l.rank.sigma, r.rank.sigma), std::max(l.rank.pi, r.rank.pi)};
          offer(s, std::move(conj), l.fv | r.fv, rk,
                [&] { return Formula::conjunction(l.formula, r.formula); });
          offer(s, std::move(disj), l.fv | r.fv, rk,
                [&] { return Formula::disjunction(l.formula, r.formula); });
        }
    }
    std::sort(pending_.begin(), pending_.end(),
              [](const auto& x, const auto& y) { return x.text < y.text; });
    forms_[s] = std::move(pending_);
    pending_ = {};
    // Indices into pending_ are stale now; later sizes never tie with these.
    for (auto& [k, v] : seen_) v.second = static_cast<std::size_t>(-1);
  }

  void trim(std::vector<std::uint64_t>& m) const {
    if (total_ % 64) m.back() &= (1ull << (total_ % 64)) - 1;
  }

  std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> quantify(
      const std::vector<std::uint64_t>& m, std::size_t var) const {
    auto ex = empty_mask(), all = empty_mask();
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const Block& blk = blocks_[b];
      int stride = 1;
      for (std::size_t k = 0; k < var; ++k) stride *= blk.n;
      for (int a = 0; a < blk.count; ++a) {
        const int base = a - ((a / stride) % blk.n) * stride;
        bool any = false, every = true;
        for (int e = 0; e < blk.n; ++e) {
          const bool v = bit(m, static_cast<std::size_t>(blk.offset + base + e * stride));
          any = any || v;
          every = every && v;
        }
        const auto idx = static_cast<std::size_t>(blk.offset + a);
        if (any) set_bit(ex, idx);
        if (every) set_bit(all, idx);
      }
    }
    return {std::move(ex), std::move(all)};
  }

  std::vector<const FiniteModel*> models_;
  std::vector<std::string> vars_;
  unsigned cap_;
  Signature sig_;
  std::vector<Block> blocks_;
  std::size_t total_ = 0, words_ = 0;
  std::vector<std::vector<TermClass>> terms_;
  std::vector<std::vector<FormulaClass>> forms_;
  std::vector<FormulaClass> pending_;
  std::unordered_map<std::string, std::size_t> term_seen_;
  std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> seen_;
};

void check_bound(std::size_t max_size) {
  if (max_size > kMaxSearchSize)
    throw ModelError("formula size bound must be at most " + std::to_string(kMaxSearchSize));
}

}  // namespace

DefinabilityReport definable_elements(const FiniteModel& m, std::size_t max_size,
                                      const SearchOptions& opts) {
  check_bound(max_size);
  DefinabilityReport rep;
  rep.free_variable = opts.vars.empty() ? "" : opts.vars.front();
  rep.per_element.assign(static_cast<std::size_t>(m.size()), std::nullopt);
  ClassSearch search({&m}, opts.vars, opts.level ? opts.level + 1 : 0);
  search.run(max_size);
  for (const auto& bucket : search.formulas()) {
    for (const auto& c : bucket) {
      if (c.fv != 1u) continue;
      if (opts.level && c.rank.sigma > opts.level) continue;
      // Only v0 is free, so the assignments with the other digits 0 suffice.
      int hit = -1, count = 0;
      for (int e = 0; e < m.size(); ++e)
        if (search.bit(c.mask, static_cast<std::size_t>(e))) {
          hit = e;
          ++count;
        }
      if (count != 1) continue;
      Natural code = encode(c.formula);
      rep.pairs.emplace_back(code, hit);
      auto& slot = rep.per_element[static_cast<std::size_t>(hit)];
      if (!slot) slot = Definition{c.size, c.formula, code};
    }
  }
  std::sort(rep.pairs.begin(), rep.pairs.end());
  return rep;
}

Json to_json(const DefinabilityReport& r, const FiniteModel& m) {
  Json elems = Json::array();
  for (std::size_t i = 0; i < r.per_element.size(); ++i) {
    Json e{{"element", m.universe[i]}};
    if (const auto& d = r.per_element[i]) {
      e["size"] = d->size;
      e["formula"] = render(d->formula);
      e["code"] = to_string(d->code);
    } else {
      e["size"] = nullptr;
    }
    elems.push_back(std::move(e));
  }
  Json pairs = Json::array();
  for (const auto& [c, e] : r.pairs)
    pairs.push_back(Json::array({to_string(c), m.universe[static_cast<std::size_t>(e)]}));
  return Json{{"free_variable", r.free_variable}, {"elements", std::move(elems)}, {"pairs", std::move(pairs)}};
}

EquivalenceReport n_equiv(const FiniteModel& a, const FiniteModel& b, unsigned n,
                          std::size_t max_size, const SearchOptions& opts) {
  check_bound(max_size);
  EquivalenceReport rep;
  rep.level = n;
  rep.max_size = max_size;
  ClassSearch search({&a, &b}, opts.vars, n ? n + 1 : 0);
  search.run(max_size);
  const auto second = static_cast<std::size_t>(search.block_offset(1));
  for (const auto& bucket : search.formulas()) {
    for (const auto& c : bucket) {
      if (c.fv != 0) continue;
      if (n && c.rank.sigma > n) continue;
      const bool in_a = search.bit(c.mask, 0), in_b = search.bit(c.mask, second);
      if (in_a != in_b) {
        rep.equivalent = false;
        rep.witness = c.formula;
        rep.true_in_first = in_a;
        return rep;
      }
    }
  }
  return rep;
}

Json to_json(const EquivalenceReport& r) {
  Json j{{"equivalent", r.equivalent}, {"level", r.level}, {"max_size", r.max_size}};
  if (r.witness) {
    j["witness"] = render(*r.witness);
    j["true_in_first"] = r.true_in_first;
  }
  return j;
}

}  // namespace metalogic
