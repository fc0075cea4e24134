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

#ifndef REQLENS_LOGIC_HPP
#define REQLENS_LOGIC_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reqlens/ast.hpp"
#include "reqlens/formula.hpp"

namespace reqlens {

/// Bijection between atom structures and dense indices; interning is stable
/// within one checking session (equal atoms get equal indices).
class AtomTable {
 public:
  int intern(const Atom& a);
  const Atom& at(int index) const { return atoms_[static_cast<size_t>(index)]; }
  int find(const Atom& a) const;  // -1 when absent
  size_t size() const { return atoms_.size(); }

 private:
  std::map<std::string, int> index_by_key_;
  std::vector<Atom> atoms_;
};

/// Truth assignment keyed by pretty-printed atom text.
using Witness = std::map<std::string, bool>;

enum class SatOutcome { Satisfiable, Unsatisfiable, CapacityExceeded };

struct SatResult {
  SatOutcome outcome = SatOutcome::Unsatisfiable;
  Witness witness;  // a model, when satisfiable

  bool sat() const { return outcome == SatOutcome::Satisfiable; }
};

struct SatOptions {
  int max_atoms = 64;
};

/// Exact propositional satisfiability (DPLL over a Tseitin encoding).
/// Atoms appearing in `f` but not assigned during search default to false
/// in the returned witness.
SatResult satisfiable(const FormulaPtr& f, const SatOptions& options = {});

struct EntailResult {
  SatOutcome outcome = SatOutcome::Satisfiable;
  bool entailed = false;
  Witness counterexample;  // satisfies the premises, falsifies the conclusion

  bool holds() const { return outcome != SatOutcome::CapacityExceeded && entailed; }
};

/// premises |= conclusion, decided as unsat(premises and not conclusion).
EntailResult entails(const FormulaPtr& premises, const FormulaPtr& conclusion,
                     const SatOptions& options = {});

/// Splits only the outermost `or` structure (double negations removed);
/// conjunctions are not distributed, so `a and b` yields one disjunct.
std::vector<FormulaPtr> top_level_dnf(const FormulaPtr& f);

/// The clauses whose top connective is `implies`, as (antecedent,
/// consequent) pairs in clause order.
std::vector<std::pair<FormulaPtr, FormulaPtr>> implications_of(const std::vector<Clause>& clauses);

/// Independent brute-force oracle: exhaustive enumeration of all 2^n
/// assignments. Capacity-bounded at `max_atoms` (default 20).
SatResult truth_table_oracle(const FormulaPtr& f, int max_atoms = 20);

/// Direct evaluation under an assignment; atoms missing from the witness
/// read as false.
bool evaluate(const FormulaPtr& f, const Witness& w);

FormulaPtr conjoin_clauses(const std::vector<Clause>& clauses);

/// Optional "functional equality" strengthening: for each left-hand path
/// with several distinct right-hand paths among the equality atoms of
/// `context`, pairwise exclusions not (x = r_i and x = r_j). Returns `true`
/// when there is nothing to exclude.
FormulaPtr equality_exclusions(const std::vector<FormulaPtr>& context);

}  // namespace reqlens

#endif  // REQLENS_LOGIC_HPP
