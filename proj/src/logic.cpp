// Copyright 2026 The reqlens authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reqlens/logic.hpp"

#include <algorithm>
#include <cassert>

namespace reqlens {

int AtomTable::intern(const Atom& a) {
  const std::string key = a.key();
  auto it = index_by_key_.find(key);
  if (it != index_by_key_.end()) return it->second;
  const int index = static_cast<int>(atoms_.size());
  atoms_.push_back(a);
  index_by_key_.emplace(key, index);
  return index;
}

int AtomTable::find(const Atom& a) const {
  auto it = index_by_key_.find(a.key());
  return it == index_by_key_.end() ? -1 : it->second;
}

namespace {

// --- constant folding ------------------------------------------------------

FormulaPtr fold_constants(const FormulaPtr& f) {
  switch (f->kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Leaf:
      return f;
    case Formula::Kind::Not: {
      FormulaPtr c = fold_constants(f->lhs());
      if (c->kind() == Formula::Kind::True) return Formula::constant(false);
      if (c->kind() == Formula::Kind::False) return Formula::constant(true);
      return Formula::negation(std::move(c));
    }
    case Formula::Kind::And: {
      FormulaPtr l = fold_constants(f->lhs()), r = fold_constants(f->rhs());
      if (l->kind() == Formula::Kind::False || r->kind() == Formula::Kind::False)
        return Formula::constant(false);
      if (l->kind() == Formula::Kind::True) return r;
      if (r->kind() == Formula::Kind::True) return l;
      return Formula::conjunction(std::move(l), std::move(r));
    }
    case Formula::Kind::Or: {
      FormulaPtr l = fold_constants(f->lhs()), r = fold_constants(f->rhs());
      if (l->kind() == Formula::Kind::True || r->kind() == Formula::Kind::True)
        return Formula::constant(true);
      if (l->kind() == Formula::Kind::False) return r;
      if (r->kind() == Formula::Kind::False) return l;
      return Formula::disjunction(std::move(l), std::move(r));
    }
    case Formula::Kind::Implies: {
      FormulaPtr l = fold_constants(f->lhs()), r = fold_constants(f->rhs());
      if (l->kind() == Formula::Kind::False || r->kind() == Formula::Kind::True)
        return Formula::constant(true);
      if (l->kind() == Formula::Kind::True) return r;
      if (r->kind() == Formula::Kind::False) return Formula::negation(std::move(l));
      return Formula::implication(std::move(l), std::move(r));
    }
  }
  return f;
}

// --- Tseitin CNF + DPLL ----------------------------------------------------

struct Cnf {
  int var_count = 0;
  std::vector<std::vector<int>> clauses;  // literals: +v / -v, v >= 1

  int fresh() { return ++var_count; }
  void add(std::vector<int> clause) { clauses.push_back(std::move(clause)); }
};

// Returns the literal representing `f`. Atom variables are table index + 1.
int tseitin(const FormulaPtr& f, AtomTable& table, Cnf& cnf) {
  switch (f->kind()) {
    case Formula::Kind::Leaf:
      return table.intern(f->atom()) + 1;
    case Formula::Kind::Not:
      return -tseitin(f->lhs(), table, cnf);
    case Formula::Kind::And: {
      const int a = tseitin(f->lhs(), table, cnf);
      const int b = tseitin(f->rhs(), table, cnf);
      const int v = cnf.fresh();
      cnf.add({-v, a});
      cnf.add({-v, b});
      cnf.add({v, -a, -b});
      return v;
    }
    case Formula::Kind::Or: {
      const int a = tseitin(f->lhs(), table, cnf);
      const int b = tseitin(f->rhs(), table, cnf);
      const int v = cnf.fresh();
      cnf.add({-v, a, b});
      cnf.add({v, -a});
      cnf.add({v, -b});
      return v;
    }
    case Formula::Kind::Implies: {
      const int a = tseitin(f->lhs(), table, cnf);
      const int b = tseitin(f->rhs(), table, cnf);
      const int v = cnf.fresh();
      cnf.add({-v, -a, b});
      cnf.add({v, a});
      cnf.add({v, -b});
      return v;
    }
    default:
      // Constants were folded away before encoding.
      assert(false && "tseitin on constant");
      return 0;
  }
}

// Classic DPLL with unit propagation. Assignment values: -1 unknown, 0
// false, 1 true. Branch variables are tried in index order, false first,
// which keeps witnesses deterministic.
bool unit_propagate(const Cnf& cnf, std::vector<int8_t>& assign) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& clause : cnf.clauses) {
      int unassigned = 0, last_free = 0;
      bool satisfied = false;
      for (int lit : clause) {
        const int v = std::abs(lit);
        const int8_t val = assign[static_cast<size_t>(v)];
        if (val < 0) {
          ++unassigned;
          last_free = lit;
        } else if ((val == 1) == (lit > 0)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) return false;  // conflict
      if (unassigned == 1) {
        assign[static_cast<size_t>(std::abs(last_free))] = last_free > 0 ? 1 : 0;
        changed = true;
      }
    }
  }
  return true;
}

bool dpll(const Cnf& cnf, std::vector<int8_t>& assign) {
  if (!unit_propagate(cnf, assign)) return false;
  int branch = 0;
  for (int v = 1; v <= cnf.var_count; ++v) {
    if (assign[static_cast<size_t>(v)] < 0) {
      branch = v;
      break;
    }
  }
  if (branch == 0) return true;
  for (int8_t value : {int8_t{0}, int8_t{1}}) {
    std::vector<int8_t> trial = assign;
    trial[static_cast<size_t>(branch)] = value;
    if (dpll(cnf, trial)) {
      assign = std::move(trial);
      return true;
    }
  }
  return false;
}

}  // namespace

bool evaluate(const FormulaPtr& f, const Witness& w) {
  switch (f->kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Leaf: {
      auto it = w.find(f->atom().pretty());
      return it != w.end() && it->second;
    }
    case Formula::Kind::Not:
      return !evaluate(f->lhs(), w);
    case Formula::Kind::And:
      return evaluate(f->lhs(), w) && evaluate(f->rhs(), w);
    case Formula::Kind::Or:
      return evaluate(f->lhs(), w) || evaluate(f->rhs(), w);
    case Formula::Kind::Implies:
      return !evaluate(f->lhs(), w) || evaluate(f->rhs(), w);
  }
  return false;
}

SatResult satisfiable(const FormulaPtr& f, const SatOptions& options) {
  SatResult result;
  const std::vector<Atom> atoms = collect_atoms(f);
  if (static_cast<int>(atoms.size()) > options.max_atoms) {
    result.outcome = SatOutcome::CapacityExceeded;
    return result;
  }

  FormulaPtr folded = fold_constants(f);
  if (folded->kind() == Formula::Kind::True) {
    result.outcome = SatOutcome::Satisfiable;
    for (const Atom& a : atoms) result.witness[a.pretty()] = false;
    return result;
  }
  if (folded->kind() == Formula::Kind::False) {
    result.outcome = SatOutcome::Unsatisfiable;
    return result;
  }

  AtomTable table;
  Cnf cnf;
  // Intern the formula's atoms first so atom variables precede Tseitin
  // auxiliaries and branching visits them in first-occurrence order.
  for (const Atom& a : collect_atoms(folded)) table.intern(a);
  cnf.var_count = static_cast<int>(table.size());
  const int root = tseitin(folded, table, cnf);
  cnf.add({root});

  std::vector<int8_t> assign(static_cast<size_t>(cnf.var_count) + 1, int8_t{-1});
  if (!dpll(cnf, assign)) {
    result.outcome = SatOutcome::Unsatisfiable;
    return result;
  }
  result.outcome = SatOutcome::Satisfiable;
  for (const Atom& a : atoms) result.witness[a.pretty()] = false;
  for (size_t v = 0; v < table.size(); ++v)
    result.witness[table.at(static_cast<int>(v)).pretty()] = assign[v + 1] == 1;
  assert(evaluate(f, result.witness) && "witness must satisfy the formula");
  return result;
}

EntailResult entails(const FormulaPtr& premises, const FormulaPtr& conclusion,
                     const SatOptions& options) {
  EntailResult result;
  SatResult sat = satisfiable(Formula::conjunction(premises, Formula::negation(conclusion)), options);
  result.outcome = sat.outcome;
  if (sat.outcome == SatOutcome::CapacityExceeded) return result;
  result.entailed = sat.outcome == SatOutcome::Unsatisfiable;
  if (!result.entailed) result.counterexample = std::move(sat.witness);
  return result;
}

namespace {

FormulaPtr strip_double_negation(FormulaPtr f) {
  while (f->kind() == Formula::Kind::Not && f->lhs()->kind() == Formula::Kind::Not)
    f = f->lhs()->lhs();
  return f;
}

void split_or(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  FormulaPtr g = strip_double_negation(f);
  if (g->kind() == Formula::Kind::Or) {
    split_or(g->lhs(), out);
    split_or(g->rhs(), out);
  } else {
    out.push_back(g);
  }
}

}  // namespace

std::vector<FormulaPtr> top_level_dnf(const FormulaPtr& f) {
  std::vector<FormulaPtr> out;
  split_or(f, out);
  return out;
}

std::vector<std::pair<FormulaPtr, FormulaPtr>> implications_of(const std::vector<Clause>& clauses) {
  std::vector<std::pair<FormulaPtr, FormulaPtr>> out;
  for (const Clause& c : clauses)
    if (c.formula && c.formula->kind() == Formula::Kind::Implies)
      out.emplace_back(c.formula->lhs(), c.formula->rhs());
  return out;
}

SatResult truth_table_oracle(const FormulaPtr& f, int max_atoms) {
  SatResult result;
  const std::vector<Atom> atoms = collect_atoms(f);
  if (static_cast<int>(atoms.size()) > max_atoms) {
    result.outcome = SatOutcome::CapacityExceeded;
    return result;
  }
  const size_t n = atoms.size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    Witness w;
    for (size_t i = 0; i < n; ++i) w[atoms[i].pretty()] = (mask >> i) & 1;
    if (evaluate(f, w)) {
      result.outcome = SatOutcome::Satisfiable;
      result.witness = std::move(w);
      return result;
    }
  }
  result.outcome = SatOutcome::Unsatisfiable;
  return result;
}

FormulaPtr conjoin_clauses(const std::vector<Clause>& clauses) {
  std::vector<FormulaPtr> fs;
  for (const Clause& c : clauses)
    if (c.formula) fs.push_back(c.formula);
  return conjoin(fs);
}

FormulaPtr equality_exclusions(const std::vector<FormulaPtr>& context) {
  // left path text -> distinct right-hand atoms, in first-occurrence order.
  std::vector<std::pair<std::string, std::vector<Atom>>> groups;
  for (const FormulaPtr& f : context) {
    for (const Atom& a : collect_atoms(f)) {
      if (a.shape != Atom::Shape::Equality) continue;
      const std::string left = join_path(a.left);
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return g.first == left; });
      if (it == groups.end()) {
        groups.push_back({left, {a}});
        continue;
      }
      bool present = false;
      for (const Atom& seen : it->second)
        if (seen == a) present = true;
      if (!present) it->second.push_back(a);
    }
  }
  std::vector<FormulaPtr> exclusions;
  for (const auto& [left, atoms] : groups) {
    for (size_t i = 0; i < atoms.size(); ++i)
      for (size_t j = i + 1; j < atoms.size(); ++j)
        exclusions.push_back(Formula::negation(
            Formula::conjunction(Formula::leaf(atoms[i]), Formula::leaf(atoms[j]))));
  }
  return conjoin(exclusions);
}

}  // namespace reqlens
