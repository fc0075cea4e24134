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

#ifndef REQLENS_FORMULA_HPP
#define REQLENS_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

namespace reqlens {

/// A dotted object path (`car.planning_module` -> {"car","planning_module"}).
using Path = std::vector<std::string>;

std::string join_path(const Path& p);
Path split_path(const std::string& dotted);

/// A propositional atom. Identity is structural: two atoms denote the same
/// proposition iff their canonical keys are equal (whitespace-normalized).
struct Atom {
  enum class Shape { QueryPath, Predicate, Equality, Disequality, Opaque };

  Shape shape = Shape::QueryPath;
  Path path;                    // QueryPath
  Path receiver;                // Predicate (may be empty for unqualified applications)
  std::string feature;          // Predicate
  std::vector<Path> arguments;  // Predicate
  Path left, right;             // Equality / Disequality
  std::string text;             // Opaque (whitespace-normalized raw text)

  static Atom query(Path p);
  static Atom predicate(Path receiver, std::string feature, std::vector<Path> args);
  static Atom equality(Path l, Path r);
  static Atom disequality(Path l, Path r);
  static Atom opaque(std::string raw_text);

  std::string key() const;
  std::string pretty() const;

  friend bool operator==(const Atom& a, const Atom& b) { return a.key() == b.key(); }
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable propositional formula over Atoms. Connectives: not, and, or,
/// implies; constants true/false. `not` binds tightest, then `and`, then
/// `or`, then `implies`; `implies` associates right, `and`/`or` left.
class Formula {
 public:
  enum class Kind { True, False, Leaf, Not, And, Or, Implies };

  Kind kind() const { return kind_; }
  const Atom& atom() const { return atom_; }
  const FormulaPtr& lhs() const { return lhs_; }
  const FormulaPtr& rhs() const { return rhs_; }

  static FormulaPtr constant(bool value);
  static FormulaPtr leaf(Atom a);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conjunction(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disjunction(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implication(FormulaPtr a, FormulaPtr b);

 private:
  Formula(Kind k, Atom a, FormulaPtr l, FormulaPtr r)
      : kind_(k), atom_(std::move(a)), lhs_(std::move(l)), rhs_(std::move(r)) {}

  Kind kind_;
  Atom atom_;
  FormulaPtr lhs_, rhs_;
};

bool formulas_equal(const FormulaPtr& a, const FormulaPtr& b);

/// Conjunction of a list; empty list is `true`, singleton is the element.
FormulaPtr conjoin(const std::vector<FormulaPtr>& fs);

/// Pretty text with minimal parentheses; re-parsing it yields a
/// structurally identical formula.
std::string pretty(const FormulaPtr& f);

/// Distinct atoms of `f` in first-occurrence order.
std::vector<Atom> collect_atoms(const FormulaPtr& f);
void collect_atoms_into(const FormulaPtr& f, std::vector<Atom>& out);

}  // namespace reqlens

#endif  // REQLENS_FORMULA_HPP
