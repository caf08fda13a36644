#include "metalogic/enumerate.hpp"

#include <algorithm>

#include "metalogic/complexity.hpp"
#include "metalogic/sexpr.hpp"

namespace metalogic {

namespace {

// Every way to split `total` into `parts` ordered sizes, each bucket nonempty.
template <class F>
void for_each_split(std::size_t total, std::size_t parts, const std::vector<std::size_t>& avail,
                    std::vector<std::size_t>& acc, F&& f) {
  if (acc.size() + 1 == parts) {
    if (total < avail.size() && avail[total]) {
      acc.push_back(total);
      f(acc);
      acc.pop_back();
    }
    return;
  }
  for (std::size_t s = 0; s <= total && s < avail.size(); ++s) {
    if (!avail[s]) continue;
    acc.push_back(s);
    for_each_split(total - s, parts, avail, acc, f);
    acc.pop_back();
  }
}

template <class T, class F>
void for_each_tuple(const std::vector<std::vector<T>>& by_size,
                    const std::vector<std::size_t>& sizes, std::vector<T>& acc, F&& f) {
  if (acc.size() == sizes.size()) {
    f(acc);
    return;
  }
  for (const auto& x : by_size[sizes[acc.size()]]) {
    acc.push_back(x);
    for_each_tuple(by_size, sizes, acc, f);
    acc.pop_back();
  }
}

std::vector<std::size_t> nonempty(const std::vector<std::vector<Term>>& v) {
  std::vector<std::size_t> out;
  for (const auto& b : v) out.push_back(b.empty() ? 0 : b.size());
  return out;
}

}  // namespace

std::vector<std::vector<Term>> terms_by_size(const EnumSpec& spec, std::size_t max_size) {
  std::vector<std::vector<Term>> by(max_size + 1);
  for (const auto& v : spec.vars) by[0].push_back(Term::variable(v));
  if (spec.constants && max_size >= 1)
    for (const auto& c : spec.sig.constants) by[1].push_back(Term::constant(c));
  for (const auto& leaf : spec.extra_leaves)
    if (leaf.weight <= max_size) by[leaf.weight].push_back(leaf.term);
  if (!spec.functions) return by;
  for (std::size_t s = 1; s <= max_size; ++s) {
    for (const auto& [name, arity] : spec.sig.functions) {
      std::vector<std::size_t> acc;
      for_each_split(s - 1, static_cast<std::size_t>(arity), nonempty(by), acc,
                     [&](const std::vector<std::size_t>& sizes) {
                       std::vector<Term> args;
                       for_each_tuple(by, sizes, args, [&](const std::vector<Term>& a) {
                         by[s].push_back(Term::apply(name, a));
                       });
                     });
    }
  }
  return by;
}

std::vector<std::vector<Formula>> formulas_by_size(const EnumSpec& spec,
                                                   std::size_t max_size) {
  const auto terms = terms_by_size(spec, max_size);
  const auto tsz = nonempty(terms);
  std::vector<std::vector<Formula>> by(max_size + 1);
  for (std::size_t s = 1; s <= max_size; ++s) {
    auto& out = by[s];
    if (spec.equality) {
      std::vector<std::size_t> acc;
      for_each_split(s - 1, 2, tsz, acc, [&](const std::vector<std::size_t>& sizes) {
        std::vector<Term> args;
        for_each_tuple(terms, sizes, args, [&](const std::vector<Term>& a) {
          out.push_back(Formula::equal(a[0], a[1]));
        });
      });
    }
    if (spec.relations) {
      for (const auto& [name, arity] : spec.sig.relations) {
        if (arity == 0) {
          if (s == 1) out.push_back(Formula::relation(name, {}));
          continue;
        }
        std::vector<std::size_t> acc;
        for_each_split(s - 1, static_cast<std::size_t>(arity), tsz, acc,
                       [&](const std::vector<std::size_t>& sizes) {
                         std::vector<Term> args;
                         for_each_tuple(terms, sizes, args, [&](const std::vector<Term>& a) {
                           out.push_back(Formula::relation(name, a));
                         });
                       });
      }
    }
    if (s >= 2) {
      for (const auto& f : by[s - 1]) {
        if (spec.negation) out.push_back(Formula::negation(f));
        for (const auto& v : spec.vars) {
          if (spec.exists) out.push_back(Formula::exists(v, f));
          if (spec.forall) out.push_back(Formula::forall(v, f));
        }
      }
    }
    if (s >= 3 && (spec.conjunction || spec.disjunction)) {
      for (std::size_t a = 1; a + 1 < s; ++a) {
        const std::size_t b = s - 1 - a;
        for (const auto& l : by[a])
          for (const auto& r : by[b]) {
            if (spec.conjunction) out.push_back(Formula::conjunction(l, r));
            if (spec.disjunction) out.push_back(Formula::disjunction(l, r));
          }
      }
    }
    std::vector<std::pair<std::string, Formula>> keyed;
    keyed.reserve(out.size());
    for (auto& f : out)
      if (dp(f) <= spec.max_dp) keyed.emplace_back(render(f), std::move(f));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    out.clear();
    for (auto& [k, f] : keyed) out.push_back(std::move(f));
  }
  return by;
}

std::vector<unsigned long long> count_formulas_by_size(const EnumSpec& spec,
                                                       std::size_t max_size) {
  std::vector<unsigned long long> t(max_size + 1), f(max_size + 1);
  auto tuples = [&](std::size_t total, std::size_t parts) {
    // number of ordered term tuples with sizes summing to total
    std::vector<unsigned long long> ways(total + 1, 0);
    ways[0] = 1;
    for (std::size_t p = 0; p < parts; ++p) {
      std::vector<unsigned long long> next(total + 1, 0);
      for (std::size_t a = 0; a <= total; ++a)
        for (std::size_t b = 0; a + b <= total; ++b) next[a + b] += ways[a] * t[b];
      ways = std::move(next);
    }
    return ways[total];
  };
  t[0] = spec.vars.size();
  for (const auto& leaf : spec.extra_leaves)
    if (leaf.weight <= max_size) ++t[leaf.weight];
  if (spec.constants && max_size >= 1) t[1] += spec.sig.constants.size();
  for (std::size_t s = 1; spec.functions && s <= max_size; ++s)
    for (const auto& [name, arity] : spec.sig.functions)
      t[s] += tuples(s - 1, static_cast<std::size_t>(arity));
  const unsigned long long nv = spec.vars.size();
  for (std::size_t s = 1; s <= max_size; ++s) {
    unsigned long long n = 0;
    if (spec.equality) n += tuples(s - 1, 2);
    if (spec.relations)
      for (const auto& [name, arity] : spec.sig.relations)
        n += arity == 0 ? (s == 1) : tuples(s - 1, static_cast<std::size_t>(arity));
    if (s >= 2)
      n += f[s - 1] * ((spec.negation ? 1 : 0) + nv * ((spec.exists ? 1 : 0) + (spec.forall ? 1 : 0)));
    const unsigned long long bin = (spec.conjunction ? 1 : 0) + (spec.disjunction ? 1 : 0);
    for (std::size_t a = 1; a + 1 < s; ++a) n += bin * f[a] * f[s - 1 - a];
    f[s] = n;
  }
  return f;
}

}  // namespace metalogic
