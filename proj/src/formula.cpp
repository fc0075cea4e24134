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

#include "reqlens/formula.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace reqlens {

std::string join_path(const Path& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += '.';
    out += p[i];
  }
  return out;
}

Path split_path(const std::string& dotted) {
  Path out;
  std::string seg;
  for (char c : dotted) {
    if (c == '.') {
      out.push_back(seg);
      seg.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      seg += c;
    }
  }
  if (!seg.empty()) out.push_back(seg);
  return out;
}

namespace {

std::string squeeze_whitespace(const std::string& s) {
  std::string out;
  bool in_ws = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_ws = !out.empty();
    } else {
      if (in_ws) out += ' ';
      in_ws = false;
      out += c;
    }
  }
  return out;
}

}  // namespace

Atom Atom::query(Path p) {
  Atom a;
  a.shape = Shape::QueryPath;
  a.path = std::move(p);
  return a;
}

Atom Atom::predicate(Path receiver, std::string feature, std::vector<Path> args) {
  Atom a;
  a.shape = Shape::Predicate;
  a.receiver = std::move(receiver);
  a.feature = std::move(feature);
  a.arguments = std::move(args);
  return a;
}

Atom Atom::equality(Path l, Path r) {
  Atom a;
  a.shape = Shape::Equality;
  a.left = std::move(l);
  a.right = std::move(r);
  return a;
}

Atom Atom::disequality(Path l, Path r) {
  Atom a;
  a.shape = Shape::Disequality;
  a.left = std::move(l);
  a.right = std::move(r);
  return a;
}

Atom Atom::opaque(std::string raw_text) {
  Atom a;
  a.shape = Shape::Opaque;
  a.text = squeeze_whitespace(raw_text);
  return a;
}

std::string Atom::key() const {
  switch (shape) {
    case Shape::QueryPath:
      return "q:" + join_path(path);
    case Shape::Predicate: {
      std::string k = "p:" + join_path(receiver) + "#" + feature + "(";
      for (size_t i = 0; i < arguments.size(); ++i) {
        if (i > 0) k += ',';
        k += join_path(arguments[i]);
      }
      return k + ")";
    }
    case Shape::Equality:
      return "eq:" + join_path(left) + "=" + join_path(right);
    case Shape::Disequality:
      return "ne:" + join_path(left) + "/=" + join_path(right);
    case Shape::Opaque:
      return "op:" + text;
  }
  return "";
}

std::string Atom::pretty() const {
  switch (shape) {
    case Shape::QueryPath:
      return join_path(path);
    case Shape::Predicate: {
      std::string s = receiver.empty() ? "" : join_path(receiver) + ".";
      s += feature + " (";
      for (size_t i = 0; i < arguments.size(); ++i) {
        if (i > 0) s += ", ";
        s += join_path(arguments[i]);
      }
      return s + ")";
    }
    case Shape::Equality:
      return join_path(left) + " = " + join_path(right);
    case Shape::Disequality:
      return join_path(left) + " /= " + join_path(right);
    case Shape::Opaque:
      return text;
  }
  return "";
}

FormulaPtr Formula::constant(bool value) {
  return FormulaPtr(new Formula(value ? Kind::True : Kind::False, Atom{}, nullptr, nullptr));
}

FormulaPtr Formula::leaf(Atom a) {
  return FormulaPtr(new Formula(Kind::Leaf, std::move(a), nullptr, nullptr));
}

FormulaPtr Formula::negation(FormulaPtr f) {
  return FormulaPtr(new Formula(Kind::Not, Atom{}, std::move(f), nullptr));
}

FormulaPtr Formula::conjunction(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Kind::And, Atom{}, std::move(a), std::move(b)));
}

FormulaPtr Formula::disjunction(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Kind::Or, Atom{}, std::move(a), std::move(b)));
}

FormulaPtr Formula::implication(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Kind::Implies, Atom{}, std::move(a), std::move(b)));
}

bool formulas_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return true;
    case Formula::Kind::Leaf:
      return a->atom() == b->atom();
    case Formula::Kind::Not:
      return formulas_equal(a->lhs(), b->lhs());
    default:
      return formulas_equal(a->lhs(), b->lhs()) && formulas_equal(a->rhs(), b->rhs());
  }
}

FormulaPtr conjoin(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return Formula::constant(true);
  FormulaPtr acc = fs.front();
  for (size_t i = 1; i < fs.size(); ++i) acc = Formula::conjunction(acc, fs[i]);
  return acc;
}

namespace {

// Precedence: implies = 1, or = 2, and = 3, not = 4, leaf/constant = 5.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Implies:
      return 1;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::And:
      return 3;
    case Formula::Kind::Not:
      return 4;
    default:
      return 5;
  }
}

void print_prec(const FormulaPtr& f, int min_prec, std::string& out) {
  const int prec = precedence(*f);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f->kind()) {
    case Formula::Kind::True:
      out += "true";
      break;
    case Formula::Kind::False:
      out += "false";
      break;
    case Formula::Kind::Leaf:
      out += f->atom().pretty();
      break;
    case Formula::Kind::Not:
      out += "not ";
      print_prec(f->lhs(), 4, out);
      break;
    case Formula::Kind::And:
      print_prec(f->lhs(), 3, out);
      out += " and ";
      print_prec(f->rhs(), 4, out);
      break;
    case Formula::Kind::Or:
      print_prec(f->lhs(), 2, out);
      out += " or ";
      print_prec(f->rhs(), 3, out);
      break;
    case Formula::Kind::Implies:
      print_prec(f->lhs(), 2, out);
      out += " implies ";
      print_prec(f->rhs(), 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string pretty(const FormulaPtr& f) {
  std::string out;
  if (f) print_prec(f, 0, out);
  return out;
}

void collect_atoms_into(const FormulaPtr& f, std::vector<Atom>& out) {
  if (!f) return;
  if (f->kind() == Formula::Kind::Leaf) {
    const std::string k = f->atom().key();
    for (const Atom& seen : out)
      if (seen.key() == k) return;
    out.push_back(f->atom());
    return;
  }
  collect_atoms_into(f->lhs(), out);
  collect_atoms_into(f->rhs(), out);
}

std::vector<Atom> collect_atoms(const FormulaPtr& f) {
  std::vector<Atom> out;
  collect_atoms_into(f, out);
  return out;
}

}  // namespace reqlens
