#include <gtest/gtest.h>

#include "hosmt/diagnostics.hpp"
#include "hosmt/lexer.hpp"
#include "hosmt/parser.hpp"
#include "hosmt/printer.hpp"
#include "support/files.hpp"
#include "support/surface_gen.hpp"

namespace hosmt {
namespace {

using testing::read_test_file;

std::vector<std::string> texts(const std::vector<Token>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(t.text);
  return out;
}

TEST(Lexer, ArrowSort) {
  EXPECT_EQ(texts(tokenize("(-> Int Int)")), (std::vector<std::string>{"(", "->", "Int", "Int", ")"}));
}

TEST(Lexer, CurriedAssert) {
  auto ts = tokenize("(assert (= (f (h 1)) ((g 1) 2)))");
  ASSERT_EQ(ts.size(), 20u);
  for (std::size_t i = 17; i < 20; ++i) EXPECT_EQ(ts[i].kind, TokenKind::rparen);
  EXPECT_EQ(ts[8].kind, TokenKind::numeral);
}

TEST(Lexer, CommentsAreDropped) {
  EXPECT_EQ(texts(tokenize("; comment\n(exit)")), (std::vector<std::string>{"(", "exit", ")"}));
}

TEST(Lexer, Positions) {
  auto ts = tokenize("(a\n  b)");
  EXPECT_EQ(ts[2].pos, (SourcePos{2, 3}));
}

TEST(Lexer, LiteralsAndQuotedSymbols) {
  auto ts = tokenize(":named |a b| 12 1.5 #x1F #b01 \"x\"\"y\"");
  ASSERT_EQ(ts.size(), 7u);
  EXPECT_EQ(ts[0].kind, TokenKind::keyword);
  EXPECT_EQ(ts[1].text, "a b");
  EXPECT_TRUE(ts[1].quoted);
  EXPECT_EQ(ts[2].kind, TokenKind::numeral);
  EXPECT_EQ(ts[3].kind, TokenKind::decimal);
  EXPECT_EQ(ts[4].kind, TokenKind::hexadecimal);
  EXPECT_EQ(ts[5].kind, TokenKind::binary);
  EXPECT_EQ(ts[6].kind, TokenKind::string);
}

TEST(Lexer, UnterminatedInputsReportPosition) {
  try {
    tokenize("(assert\n  \"open");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::lexical);
    EXPECT_EQ(e.pos(), (SourcePos{2, 3}));
  }
  EXPECT_THROW(tokenize("|never closed"), Error);
}

TEST(Parser, FirstProgram) {
  auto cmds = parse_script(read_test_file("data/program1.smt2"));
  ASSERT_EQ(cmds.size(), 6u);
  EXPECT_EQ(cmds[0].kind, Command::Kind::set_logic);
  EXPECT_EQ(cmds[5].kind, Command::Kind::exit);
  const SurfaceTerm& eq = *cmds[4].term;
  ASSERT_EQ(eq.kind, SurfaceTerm::Kind::apply);
  const SurfaceTerm& rhs = eq.args()[1];
  EXPECT_EQ(rhs, parse_term("((g 1) 2)"));
  EXPECT_EQ(rhs.head(), parse_term("(g 1)"));
}

TEST(Parser, SecondProgramLambdaBodyIsAnApplication) {
  auto cmds = parse_script(read_test_file("data/program2.smt2"));
  const SurfaceTerm& lhs = cmds[2].term->args()[0];
  ASSERT_EQ(lhs.kind, SurfaceTerm::Kind::apply);
  const SurfaceTerm& lam = lhs.head();
  ASSERT_EQ(lam.kind, SurfaceTerm::Kind::lambda);
  ASSERT_EQ(lam.binders.size(), 2u);
  EXPECT_EQ(lam.binders[0].name, "f");
  EXPECT_EQ(lam.binders[0].sort, parse_sort("(-> Int Int)"));
  EXPECT_EQ(lam.body(), parse_term("(f x)"));
  EXPECT_EQ(lhs.args().size(), 2u);
  EXPECT_EQ(print_term(lam), "(lambda ((f (-> Int Int)) (x Int)) (f x))");
}

TEST(Parser, EmptyInput) { EXPECT_TRUE(parse_script("").empty()); }

TEST(Parser, Sorts) {
  SurfaceSort s = parse_sort("(-> Int Int)");
  ASSERT_EQ(s.kind, SurfaceSort::Kind::arrow);
  EXPECT_EQ(s.domains().size(), 1u);
  EXPECT_EQ(s.result(), SurfaceSort::identifier("Int"));

  SurfaceSort hi = parse_sort("(-> (-> Int Int) Int)");
  EXPECT_EQ(hi, SurfaceSort::arrow({parse_sort("(-> Int Int)")}, SurfaceSort::identifier("Int")));
  EXPECT_EQ(parse_sort("Int"), SurfaceSort::identifier("Int"));
  EXPECT_EQ(parse_sort("(Array Int Bool)").kind, SurfaceSort::Kind::parametric);
}

TEST(Parser, ArrowNeedsTwoSorts) {
  try {
    parse_sort("(-> Int)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    EXPECT_EQ(e.pos(), (SourcePos{1, 1}));
  }
}

TEST(Parser, MalformedInputs) {
  EXPECT_THROW(parse_script("(assert (f 1)"), Error);
  EXPECT_THROW(parse_script("(assert (f 1)))"), Error);
  EXPECT_THROW(parse_script("(declare-fun f Int Int)"), Error);
  EXPECT_THROW(parse_term("(lambda () x)"), Error);
  EXPECT_THROW(parse_term("(let () x)"), Error);
}

TEST(Parser, UnknownCommandsAreKept) {
  auto cmds = parse_script("(set-option :produce-proofs true)");
  ASSERT_EQ(cmds.size(), 1u);
  EXPECT_EQ(cmds[0].kind, Command::Kind::unknown);
  EXPECT_EQ(print_command(cmds[0]), "(set-option :produce-proofs true)");
}

TEST(Printer, Examples) {
  EXPECT_EQ(print_term(SurfaceTerm::identifier("g")), "g");
  SurfaceTerm g12 = SurfaceTerm::apply(
      SurfaceTerm::apply(SurfaceTerm::identifier("g"), {SurfaceTerm::constant(TokenKind::numeral, "1")}),
      {SurfaceTerm::constant(TokenKind::numeral, "2")});
  EXPECT_EQ(print_term(g12), "((g 1) 2)");
  EXPECT_EQ(print_sort(parse_sort("(->  Int (-> Int  Int))")), "(-> Int (-> Int Int))");
}

TEST(Printer, ProgramsRoundTrip) {
  for (const char* f : {"data/program1.smt2", "data/program2.smt2", "data/example3.smt2",
                        "data/normal.smt2", "data/quantifiers.smt2"}) {
    auto cmds = parse_script(read_test_file(f));
    std::string text = print_script(cmds);
    EXPECT_EQ(print_script(parse_script(text)), text) << f;
  }
}

TEST(Printer, RandomSurfaceTermsRoundTrip) {
  testing::SurfaceGenerator gen(7);
  for (int i = 0; i < 300; ++i) {
    SurfaceTerm t = gen.term(5);
    std::string text = print_term(t);
    EXPECT_EQ(parse_term(text), t) << text;
  }
}

TEST(Printer, QuotedNames) {
  SurfaceTerm t = SurfaceTerm::identifier("a b");
  EXPECT_EQ(print_term(t), "|a b|");
  EXPECT_EQ(print_term(SurfaceTerm::identifier("lambda")), "|lambda|");
  EXPECT_EQ(parse_term("|a b|"), t);
}

}  // namespace
}  // namespace hosmt
