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

#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "reqlens/logic.hpp"
#include "reqlens/model.hpp"
#include "reqlens/parser.hpp"

using namespace reqlens;
using namespace reqlens::testing;

namespace {

RequirementsModel model_from(const std::string& text, bool expect_clean = true) {
  ParseResult parsed = parse_source(text, "t");
  REQUIRE(!parsed.has_errors());
  std::vector<Diagnostic> diags;
  RequirementsModel model = build_model(parsed.classes, diags);
  if (expect_clean) CHECK(count_severity(diags, Severity::Error) == 0);
  return model;
}

}  // namespace

TEST_CASE("a lone book class resolves to six features and four invariants") {
  ParseResult parsed = parse_source(R"(
class BOOK feature
    is_available, is_on_hold, is_checked_out: BOOLEAN
    place_hold (patron: PATRON)
        require
            is_available
        deferred
        ensure
            is_on_hold
            not is_available
        end
    checkout (patron: PATRON)
        require
            is_on_hold
        deferred
        ensure
            is_checked_out
        end
    return (patron: PATRON)
        require
            is_checked_out
        deferred
        ensure
            is_available
        end
invariant
    is_on_hold implies not is_available
    is_checked_out implies not is_available
    is_checked_out implies not is_on_hold
    is_available implies not is_checked_out
end)",
                                    "t");
  REQUIRE(parsed.classes.size() == 1);
  std::vector<Diagnostic> diags;
  RequirementsModel model = build_model(parsed.classes, diags);
  CHECK(diags.empty());
  const ClassDecl* book = model.find_class("BOOK");
  REQUIRE(book != nullptr);
  CHECK(book->features.size() == 6);
  CHECK(book->invariant_clauses.size() == 4);
  CHECK(book->is_deferred);  // three deferred commands
  int queries = 0, commands = 0;
  for (const FeatureDecl& f : book->features) {
    if (f.kind == FeatureKind::BooleanQuery) ++queries;
    if (f.kind == FeatureKind::Command) ++commands;
  }
  CHECK(queries == 3);
  CHECK(commands == 3);
}

TEST_CASE("an empty source list yields an empty model and no diagnostics") {
  std::vector<Diagnostic> diags;
  RequirementsModel model = build_model({}, diags);
  CHECK(model.classes().empty());
  CHECK(diags.empty());
}

TEST_CASE("a stories class sees inherited features through the flattened table") {
  std::string text = read_corpus("roborace.rsl") + R"(
class ROBORACE_USE_CASE_STORIES
inherit
    ROBORACE_USE_CASES
feature
    emergency_stop_red_flag_story
        require
            car.red_flag_is_up
        do
            emergency_stop
        end
end)";
  RequirementsModel model = model_from(text);
  const FeatureDecl* inherited = model.find_feature("ROBORACE_USE_CASE_STORIES", "emergency_stop");
  REQUIRE(inherited != nullptr);
  CHECK(inherited->origin_class == "ROBORACE_USE_CASES");
  CHECK(pretty(conjoin_clauses(inherited->preconditions)) ==
        "car.red_flag_is_up or car.location_error_is_detected");
}

TEST_CASE("feature lookup returns the contracted entry or nothing") {
  Analysis analysis = analyze_corpus();
  const FeatureDecl* checkout = analysis.model.find_feature("BOOK", "checkout");
  REQUIRE(checkout != nullptr);
  REQUIRE(checkout->preconditions.size() == 1);
  CHECK(pretty(checkout->preconditions[0].formula) == "is_on_hold");
  REQUIRE(checkout->postconditions.size() == 1);
  CHECK(pretty(checkout->postconditions[0].formula) == "is_checked_out");

  CHECK(analysis.model.find_feature("BOOK", "nonexistent") == nullptr);
  CHECK(analysis.model.has_class("BOOK"));
  CHECK(!analysis.model.has_class("NOT_A_CLASS"));
}

TEST_CASE("contract instantiation substitutes formals and prefixes the receiver") {
  Analysis analysis = analyze_corpus();
  const FeatureDecl* place = analysis.model.find_feature("LIBRARY", "place_book_on_hold");
  REQUIRE(place != nullptr);
  InstantiatedContract c =
      instantiate_contract(*place, Path{"l"}, {Path{"b"}, Path{"p1"}, Path{"lb"}});
  CHECK(pretty(c.precondition) == "l.has_patron (p1) and l.has_branch (lb)");
  CHECK(pretty(c.postcondition) == "l.book_is_on_hold (b, p1, lb)");
}

TEST_CASE("an empty contract instantiates to true and true") {
  RequirementsModel model = model_from("class C feature\n    r\n        do\n        end\nend");
  const FeatureDecl* r = model.find_feature("C", "r");
  REQUIRE(r != nullptr);
  InstantiatedContract c = instantiate_contract(*r, Path{"x"}, {});
  CHECK(c.precondition->kind() == Formula::Kind::True);
  CHECK(c.postcondition->kind() == Formula::Kind::True);
}

TEST_CASE("unqualified atoms take the receiver prefix") {
  Analysis analysis = analyze_corpus();
  const FeatureDecl* place_hold = analysis.model.find_feature("BOOK", "place_hold");
  REQUIRE(place_hold != nullptr);
  InstantiatedContract c = instantiate_contract(*place_hold, Path{"b2"}, {Path{"p"}});
  CHECK(pretty(c.precondition) == "b2.is_available");
  CHECK(pretty(c.postcondition) == "b2.is_on_hold and not b2.is_available");
}

TEST_CASE("qualified atoms are prefixed through the receiver") {
  Analysis analysis = analyze_corpus();
  const FeatureDecl* update = analysis.model.find_feature("ROBORACE_USE_CASES", "update_speed");
  REQUIRE(update != nullptr);
  InstantiatedContract c = instantiate_contract(*update, Path{"uc"}, {});
  CHECK(pretty(c.precondition) == "uc.car.yellow_flag_is_up");
  CHECK(pretty(c.postcondition) == "uc.car.current_max_speed = uc.car.safe_speed");
}

TEST_CASE("identity substitution reproduces the declared clauses") {
  Analysis analysis = analyze_corpus();
  for (const auto& [name, cls] : analysis.model.classes()) {
    for (const FeatureDecl& f : cls.features) {
      if (!f.has_contract()) continue;
      std::vector<Path> actuals;
      for (const Formal& formal : f.formals) actuals.push_back(Path{formal.name});
      InstantiatedContract c = instantiate_contract(f, Path{}, actuals);
      CAPTURE(name);
      CAPTURE(f.name);
      CHECK(clauses_equal(c.pre_clauses, f.preconditions));
      CHECK(clauses_equal(c.post_clauses, f.postconditions));
    }
  }
}

TEST_CASE("instantiation with the wrong arity is a programming error") {
  Analysis analysis = analyze_corpus();
  const FeatureDecl* place_hold = analysis.model.find_feature("BOOK", "place_hold");
  REQUIRE(place_hold != nullptr);
  CHECK_THROWS_AS(instantiate_contract(*place_hold, Path{"b"}, {}), std::invalid_argument);
}

TEST_CASE("the invariant context prefixes each in-scope path") {
  Analysis analysis = analyze_corpus();
  std::vector<Diagnostic> warnings;
  FormulaPtr context = invariant_context(analysis.model, {{"car", "RACE_CAR"}}, &warnings);
  CHECK(warnings.empty());
  std::vector<FormulaPtr> clauses = {context};
  // Three conjoined clauses, each prefixed with `car.`.
  const std::string text = pretty(context);
  CHECK(text.find("car.yellow_flag_is_up implies car.current_max_speed = car.safe_speed") !=
        std::string::npos);
  CHECK(text.find("car.green_flag_is_up implies car.current_max_speed = car.max_speed") !=
        std::string::npos);
  CHECK(text.find("car.red_flag_is_up implies car.safe_stop_activated") != std::string::npos);
  CHECK(collect_atoms(context).size() == 6);
}

TEST_CASE("an empty scope yields the trivial context") {
  Analysis analysis = analyze_corpus();
  FormulaPtr context = invariant_context(analysis.model, {}, nullptr);
  CHECK(context->kind() == Formula::Kind::True);
}

TEST_CASE("two instances contribute disjoint prefixed clause sets") {
  Analysis analysis = analyze_corpus();
  std::vector<Diagnostic> warnings;
  FormulaPtr context =
      invariant_context(analysis.model, {{"b", "BOOK"}, {"b2", "BOOK"}}, &warnings);
  CHECK(warnings.empty());
  // 4 clauses per instance; the atom sets for the two prefixes are disjoint.
  std::set<std::string> b_atoms, b2_atoms;
  for (const Atom& a : collect_atoms(context)) {
    const std::string text = a.pretty();
    if (text.rfind("b2.", 0) == 0)
      b2_atoms.insert(text);
    else
      b_atoms.insert(text);
  }
  CHECK(b_atoms.size() == 3);
  CHECK(b2_atoms.size() == 3);
  int conjuncts = 1;
  for (FormulaPtr f = context; f->kind() == Formula::Kind::And; f = f->lhs()) ++conjuncts;
  CHECK(conjuncts == 8);
}

TEST_CASE("unknown-class paths contribute nothing and warn") {
  Analysis analysis = analyze_corpus();
  std::vector<Diagnostic> warnings;
  FormulaPtr context = invariant_context(analysis.model, {{"p", "PATRON"}}, &warnings);
  CHECK(context->kind() == Formula::Kind::True);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].code == codes::kUnknownClass);
  CHECK(warnings[0].severity == Severity::Warning);
}

TEST_CASE("flattening is idempotent") {
  Analysis analysis = analyze_corpus();
  std::vector<ClassDecl> flattened;
  for (const auto& [name, cls] : analysis.model.classes()) flattened.push_back(cls);
  std::vector<Diagnostic> diags;
  RequirementsModel again = build_model(flattened, diags);
  CHECK(count_severity(diags, Severity::Error) == 0);
  for (const auto& [name, cls] : analysis.model.classes()) {
    const ClassDecl* re = again.find_class(name);
    REQUIRE(re != nullptr);
    CAPTURE(name);
    CHECK(classes_equal(cls, *re));
  }
}

TEST_CASE("resolution reports duplicate classes") {
  ParseResult parsed = parse_source("class A feature end\nclass A feature end", "t");
  std::vector<Diagnostic> diags;
  build_model(parsed.classes, diags);
  CHECK(count_code(diags, codes::kResolutionError) == 1);
}

TEST_CASE("resolution reports unknown parents") {
  ParseResult parsed = parse_source("class A inherit MISSING feature end", "t");
  std::vector<Diagnostic> diags;
  build_model(parsed.classes, diags);
  CHECK(count_code(diags, codes::kResolutionError) == 1);
}

TEST_CASE("resolution reports inheritance cycles") {
  ParseResult parsed =
      parse_source("class A inherit B feature end\nclass B inherit A feature end", "t");
  std::vector<Diagnostic> diags;
  build_model(parsed.classes, diags);
  CHECK(count_code(diags, codes::kResolutionError) >= 1);
}

TEST_CASE("resolution reports conflicting duplicate features after flattening") {
  ParseResult parsed = parse_source(R"(
class P feature
    r
        do
        end
end
class C
inherit
    P
feature
    r
        require
            a
        do
        end
end)",
                                    "t");
  std::vector<Diagnostic> diags;
  build_model(parsed.classes, diags);
  CHECK(count_code(diags, codes::kResolutionError) == 1);
}
