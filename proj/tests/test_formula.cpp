#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prooflab/formula.hpp"
#include "prooflab/gen.hpp"
#include "prooflab/sequent.hpp"

using namespace prooflab;

TEST_CASE("parsing matches the grammar") {
  Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");
  CHECK(parse_formula("p -> (q * r)") == f_imp(p, f_star(q, r)));
  CHECK(parse_formula("!(p /\\ 1)") == Formula::bang(f_and(p, Formula::one())));
  CHECK_THROWS_AS(parse_formula("p ->"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p"), ParseError);
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);

  // precedence: ! > * > /\ = \/ > ->, -> right-assoc, lattice left-assoc
  CHECK(parse_formula("!p * q") == f_star(Formula::bang(p), q));
  CHECK(parse_formula("p * q /\\ r") == f_and(f_star(p, q), r));
  CHECK(parse_formula("p /\\ q \\/ r") == f_or(f_and(p, q), r));
  CHECK(parse_formula("p -> q -> r") == f_imp(p, f_imp(q, r)));
  CHECK(parse_formula("top") == Formula::top());
  CHECK(parse_formula("bot") == Formula::bot());
  CHECK(parse_formula("topx") == Formula::atom("topx"));
}

TEST_CASE("size counts AST nodes") {
  Formula p = Formula::atom("p");
  CHECK(p.size() == 1);
  CHECK(parse_formula("p -> q * r").size() == 5);
  CHECK(parse_formula("!(0 /\\ p)").size() == 4);
}

TEST_CASE("vars") {
  CHECK(vars(Formula::one()).empty());
  CHECK(vars(parse_formula("p -> p * q")) == std::set<std::string>{"p", "q"});
  CHECK(vars(Formula::bang(Formula::atom("p"))) == std::set<std::string>{"p"});
}

TEST_CASE("derived connectives expand literally") {
  Formula p = Formula::atom("p"), q = Formula::atom("q");
  CHECK(neg(p) == parse_formula("p -> 0"));
  CHECK(quest(p) == parse_formula("(!(p -> 0)) -> 0"));
  CHECK(par(p, q) == parse_formula("((p -> 0) * (q -> 0)) -> 0"));
}

TEST_CASE("bigstar and bigplus conventions") {
  CHECK(bigstar(FormulaMultiset{}) == Formula::one());
  CHECK(bigplus(FormulaMultiset{}) == Formula::zero());
  Formula p = Formula::atom("p"), q = Formula::atom("q");
  CHECK(bigstar(FormulaMultiset{p, q}) == f_star(p, q));
  CHECK(bigstar(FormulaMultiset{q, p}) == f_star(p, q)); // canonical order
  CHECK(bigstar(FormulaMultiset{p, p}) == f_star(p, p));
}

TEST_CASE("language membership") {
  CHECK_FALSE(in_language(Formula::top(), Lang::Lu));
  CHECK(in_language(Formula::top(), Lang::Lb));
  CHECK(in_language(parse_formula("p \\/ (p -> 0)"), Lang::Lnn));
  Formula f = parse_formula("p * (q -> 0)");
  CHECK_FALSE(in_language(f, Lang::Lnn));
  CHECK(in_language(f, Lang::Lstarnn));
  CHECK_FALSE(in_language(parse_formula("(p /\\ q) -> 0"), Lang::Lstarnn));
  CHECK_FALSE(in_language(parse_formula("p * q"), Lang::Lp));
  CHECK(in_language(parse_formula("top -> p \\/ bot"), Lang::Lp));
  CHECK_FALSE(in_language(Formula::bang(Formula::atom("p")), Lang::Lb));
  CHECK(in_language(Formula::bang(Formula::atom("p")), Lang::Lbang));
}

TEST_CASE("language monotonicity on random formulas") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(Lang::Lu, 1 + i % 15, rng);
    CHECK(in_language(f, Lang::Lu));
    CHECK(in_language(f, Lang::Lb));
    CHECK(in_language(f, Lang::Lbang));
  }
}

TEST_CASE("forgetful translation") {
  CHECK(forgetful(parse_formula("p * q")) == parse_formula("p /\\ q"));
  CHECK(forgetful(Formula::bang(Formula::atom("p"))) == Formula::atom("p"));
  CHECK(forgetful(parse_formula("0 -> 1")) == parse_formula("bot -> top"));
}

TEST_CASE("forgetful preserves variables") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(Lang::Lbang, 1 + i % 20, rng);
    CHECK(vars(forgetful(f)) == vars(f));
  }
}

TEST_CASE("is_single_variable") {
  CHECK(is_single_variable(parse_formula("(p \\/ (p -> 0)) /\\ 1")));
  CHECK_FALSE(is_single_variable(parse_formula("p -> q")));
  CHECK(is_single_variable(parse_formula("0 -> 0 * 0")));
}

TEST_CASE("neg adds exactly two nodes") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(Lang::Lbang, 1 + i % 25, rng);
    CHECK(neg(f).size() == f.size() + 2);
  }
}

TEST_CASE("print/parse round trip") {
  Rng rng(42);
  Lang langs[5] = {Lang::Lu, Lang::Lb, Lang::Lbang, Lang::Lp, Lang::Lstarnn};
  for (int i = 0; i < 500; ++i) {
    Formula f = random_formula(langs[i % 5], 1 + i % 30, rng);
    CHECK(parse_formula(to_string(f)) == f);
  }
}

TEST_CASE("nnf negation") {
  Formula p = Formula::atom("p"), q = Formula::atom("q");
  CHECK(nnf_negate(p) == neg(p));
  CHECK(nnf_negate(f_and(p, neg(q))) == f_or(neg(p), q));
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(Lang::Lnn, 1 + i % 20, rng);
    CHECK(nnf_negate(nnf_negate(f)) == f);
  }
  CHECK_THROWS(nnf_negate(parse_formula("p * q")));
}

TEST_CASE("canonical order is total and structural") {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    Formula a = random_formula(Lang::Lbang, 1 + i % 12, rng);
    Formula b = random_formula(Lang::Lbang, 1 + (i * 7) % 12, rng);
    int ab = struct_compare(a, b), ba = struct_compare(b, a);
    CHECK(ab == -ba);
    CHECK((ab == 0) == (a == b));
  }
}

TEST_CASE("multiset laws") {
  Formula p = Formula::atom("p"), q = Formula::atom("q");
  FormulaMultiset m{p, p, q};
  CHECK(m.count(p) == 2);
  CHECK(m.cardinality() == 3);
  FormulaMultiset n{p};
  FormulaMultiset diff;
  REQUIRE(m.minus(n, diff));
  CHECK(diff == FormulaMultiset{p, q});
  CHECK(n.submultiset_of(m));
  CHECK_FALSE(m.submultiset_of(n));
  CHECK(m.plus(n).count(p) == 3);
}

TEST_CASE("sequent interpretation") {
  Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");
  Sequent s1;
  s1.succ.add(p);
  CHECK(interpretation(s1) == f_imp(Formula::one(), p));
  Sequent s2;
  s2.ante.add(p);
  s2.ante.add(q);
  s2.succ.add(r);
  CHECK(interpretation(s2) == f_imp(f_star(p, q), r));
  Sequent s3;
  s3.ante.add(p);
  CHECK(interpretation(s3) == f_imp(p, Formula::zero()));
}

TEST_CASE("sequent text round trip") {
  Sequent s = parse_sequent("p, q -> r, p => q * p");
  CHECK(s.ante.cardinality() == 3);
  CHECK(s.ante.count(Formula::atom("p")) == 2);
  CHECK(s.succ.count(parse_formula("q * p")) == 1);
  CHECK(parse_sequent(to_string(s)) == s);
  CHECK(parse_sequent("=>").ante.empty());
}

TEST_CASE("collapse drops unit guards and fuses") {
  CHECK(collapse_star_to_and(parse_formula("p * (q /\\ 1)")) ==
        parse_formula("p /\\ q"));
  CHECK(collapse_star_to_and(parse_formula("p /\\ 1")) == Formula::atom("p"));
}
