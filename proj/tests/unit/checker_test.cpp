#include <gtest/gtest.h>

#include "hosmt/certificate.hpp"
#include "hosmt/checker.hpp"
#include "hosmt/diagnostics.hpp"
#include "support/files.hpp"
#include "support/mutations.hpp"

namespace hosmt {
namespace {

Certificate golden(const std::string& name) {
  return parse_certificate(testing::read_test_file("golden/" + name + ".hoproof"));
}

CheckReport check_text(const std::string& text) { return check_certificate(parse_certificate(text)); }

const char* kDecls = "(declare-fun p (Int) Bool)\n(declare-fun f (Int) Int)\n(declare-fun a () Int)\n";

TEST(Certificate, GoldensAreValid) {
  for (const char* g : {"example1", "example2", "example3"}) {
    CheckReport r = check_certificate(golden(g));
    EXPECT_EQ(r.verdict, Verdict::valid) << g << " " << r.message;
    EXPECT_EQ(r.trusted, 0u);
  }
  EXPECT_EQ(golden("example1").steps.size(), 7u);
  EXPECT_EQ(golden("example2").steps.size(), 8u);
  EXPECT_EQ(golden("example3").steps.size(), 15u);
}

TEST(Certificate, SingleStep) {
  Certificate c = parse_certificate("(declare-fun a () Int)\n(step s1 :rule refl :context ((map (x a))) :conclusion (= x a))");
  ASSERT_EQ(c.steps.size(), 1u);
  EXPECT_EQ(c.steps[0].rule, Rule::refl);
  EXPECT_EQ(c.steps[0].judgment().context.size(), 1u);
  EXPECT_TRUE(check_step(c, 0).status == StepStatus::ok);
}

TEST(Certificate, UnknownRule) {
  try {
    parse_certificate("(declare-fun a () Int)\n(step s1 :rule bita :conclusion (= a a))");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::certificate);
    EXPECT_NE(std::string(e.message()).find("bita"), std::string::npos);
    EXPECT_EQ(e.pos().line, 2u);
  }
}

TEST(Certificate, MalformedSteps) {
  EXPECT_THROW(parse_certificate("(step s1 :rule refl :conclusion (= b b))"), Error);
  EXPECT_THROW(parse_certificate("(declare-fun a () Int)\n(step s1 :rule refl :conclusion (= a true))"), Error);
  EXPECT_THROW(parse_certificate("(declare-fun a () Int)\n(step s1 :rule refl)"), Error);
  EXPECT_THROW(parse_certificate("(declare-fun a () Int)\n(step :rule refl :conclusion (= a a))"), Error);
}

TEST(Certificate, PrintParseRoundTrip) {
  for (const char* g : {"example1", "example2", "example3"}) {
    Certificate c = golden(g);
    std::string text = print_certificate(c);
    Certificate again = parse_certificate(text);
    EXPECT_EQ(print_certificate(again), text) << g;
    ASSERT_EQ(again.steps.size(), c.steps.size());
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      EXPECT_EQ(again.steps[i].id, c.steps[i].id);
      EXPECT_EQ(again.steps[i].rule, c.steps[i].rule);
      EXPECT_EQ(again.steps[i].premises, c.steps[i].premises);
    }
    EXPECT_EQ(check_certificate(again).verdict, Verdict::valid);
  }
}

TEST(Checker, PerturbedReflLeaf) {
  std::string text = testing::read_test_file("golden/example1.hoproof");
  auto at = text.find("(= x a))\n(step t4");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 8, "(= x b))");
  text = "(declare-fun b () Int)\n" + text;
  CheckReport r = check_text(text);
  EXPECT_EQ(r.verdict, Verdict::invalid);
  ASSERT_TRUE(r.first_failure);
  EXPECT_EQ(r.steps[*r.first_failure].id, "t3");
}

TEST(Checker, ReflRequiresContextImage) {
  EXPECT_EQ(check_text(std::string(kDecls) + "(step s1 :rule refl :conclusion (= (f a) (f a)))").verdict, Verdict::valid);
  EXPECT_EQ(check_text(std::string(kDecls) + "(step s1 :rule refl :conclusion (= (f a) a))").verdict, Verdict::invalid);
  // Refl does not β-reduce.
  EXPECT_EQ(check_text(std::string(kDecls) + "(step s1 :rule refl :conclusion (= ((lambda ((x Int)) x) a) a))").verdict,
            Verdict::invalid);
}

TEST(Checker, Trans) {
  std::string base = std::string(kDecls) + "(declare-fun b () Int)\n(declare-fun c () Int)\n"
                     "(step s1 :rule taut :theory A :conclusion (= a b))\n"
                     "(step s2 :rule taut :theory A :conclusion (= b c))\n";
  CheckReport ok = check_text(base + "(step s3 :rule trans :premises (s1 s2) :conclusion (= a c))");
  EXPECT_EQ(ok.verdict, Verdict::valid_with_trust);
  EXPECT_EQ(ok.trusted, 2u);
  CheckReport bad = check_text(base + "(step s3 :rule trans :premises (s2 s1) :conclusion (= a c))");
  EXPECT_EQ(bad.verdict, Verdict::invalid);
  EXPECT_EQ(check_text(base + "(step s3 :rule trans :premises (s1) :conclusion (= a b))").verdict, Verdict::invalid);
}

TEST(Checker, CongWrongArgument) {
  std::string text = std::string(kDecls) +
                     "(step s1 :rule refl :conclusion (= f f))\n"
                     "(step s2 :rule refl :conclusion (= a a))\n"
                     "(step s3 :rule cong :premises (s1 s2) :conclusion (= (f a) (f (f a))))";
  EXPECT_EQ(check_text(text).verdict, Verdict::invalid);
}

TEST(Checker, BindSideCondition) {
  // λx. y ≃ λy. y: y is free on the left.
  std::string text = std::string(kDecls) +
                     "(step s1 :rule refl :context ((fix y Int) (map (x y))) :conclusion (= y y))\n"
                     "(step s2 :rule bind :premises (s1) :conclusion (= (lambda ((x Int)) y) (lambda ((y Int)) y)))";
  Certificate c = parse_certificate(text);
  StepCheck s = check_step(c, 1);
  EXPECT_EQ(s.status, StepStatus::failed);
  EXPECT_NE(s.message.find("side condition"), std::string::npos) << s.message;
}

TEST(Checker, BetaSideCondition) {
  // The argument's result m is itself mapped by the context.
  std::string text = std::string(kDecls) +
                     "(step s1 :rule refl :context ((map (m a))) :conclusion (= a m))\n"
                     "(step s2 :rule refl :context ((map (m a)) (map (x m))) :conclusion (= (p x) (p a)))\n"
                     "(step s3 :rule beta :premises (s1 s2) :context ((map (m a))) :conclusion (= ((lambda ((x Int)) (p x)) a) (p a)))";
  Certificate c = parse_certificate(text);
  StepCheck s = check_step(c, 2);
  EXPECT_EQ(s.status, StepStatus::failed);
  EXPECT_NE(s.message.find("side condition"), std::string::npos) << s.message;
}

TEST(Checker, Let) {
  std::string text = std::string(kDecls) +
                     "(step s1 :rule refl :conclusion (= (f a) (f a)))\n"
                     "(step s2 :rule refl :context ((map (x (f a)))) :conclusion (= (p x) (p (f a))))\n"
                     "(step s3 :rule let :premises (s1 s2) :conclusion (= (let ((x (f a))) (p x)) (p (f a))))";
  EXPECT_EQ(check_text(text).verdict, Verdict::valid);
  std::string wrong = text;
  wrong.replace(wrong.rfind("(p (f a))"), 9, "(p a)");
  EXPECT_EQ(check_text(wrong).verdict, Verdict::invalid);
}

TEST(Checker, Skolemization) {
  std::string ex = std::string(kDecls) +
                   "(step k1 :rule refl :context ((map (x (choice ((x Int)) (p x))))) :conclusion (= (p x) (p (choice ((y Int)) (p y)))))\n"
                   "(step k2 :rule sko_ex :premises (k1) :conclusion (= (exists ((x Int)) (p x)) (p (choice ((y Int)) (p y)))))";
  CheckReport r = check_text(ex);
  EXPECT_EQ(r.verdict, Verdict::valid) << r.message << (r.first_failure ? r.steps[*r.first_failure].check.message : "");

  std::string fa = std::string(kDecls) +
                   "(step k1 :rule refl :context ((map (x (choice ((x Int)) (not (p x)))))) :conclusion (= (p x) (p (choice ((y Int)) (not (p y))))))\n"
                   "(step k2 :rule sko_forall :premises (k1) :conclusion (= (forall ((x Int)) (p x)) (p (choice ((y Int)) (not (p y))))))";
  r = check_text(fa);
  EXPECT_EQ(r.verdict, Verdict::valid) << (r.first_failure ? r.steps[*r.first_failure].check.message : "");

  // sko_forall with the ∃ witness is wrong.
  std::string mixed = std::string(kDecls) +
                      "(step k1 :rule refl :context ((map (x (choice ((x Int)) (p x))))) :conclusion (= (p x) (p (choice ((y Int)) (p y)))))\n"
                      "(step k2 :rule sko_forall :premises (k1) :conclusion (= (forall ((x Int)) (p x)) (p (choice ((y Int)) (p y)))))";
  EXPECT_EQ(check_text(mixed).verdict, Verdict::invalid);
}

TEST(Checker, Tautologies) {
  std::string decls = kDecls;
  EXPECT_EQ(check_text(decls + "(step q1 :rule taut :theory eq :conclusion (= ((lambda ((x Int)) (f x)) a) (f a)))").verdict,
            Verdict::valid);
  EXPECT_EQ(check_text(decls + "(step q1 :rule taut :theory eq :conclusion (= (f a) a))").verdict, Verdict::invalid);
  CheckReport lia = check_text(decls + "(step q1 :rule taut :theory LIA :conclusion (= (+ 1 1) 2))");
  EXPECT_EQ(lia.verdict, Verdict::valid_with_trust);
  EXPECT_EQ(lia.trusted, 1u);
  EXPECT_EQ(lia.steps[0].check.status, StepStatus::trusted);

  TautologyValidators custom;
  custom.add("LIA", [](const EqJudgment&) { return true; });
  EXPECT_EQ(check_certificate(parse_certificate(decls + "(step q1 :rule taut :theory LIA :conclusion (= (+ 1 1) 2))"), custom)
                .verdict,
            Verdict::valid);
}

TEST(Checker, Instantiation) {
  std::string decls = std::string(kDecls) + "(declare-fun q ((-> Int Int)) Bool)\n";
  EXPECT_EQ(check_text(decls + "(step i1 :rule inst_forall :conclusion (=> (forall ((x Int)) (p x)) (p a)) :binding ((x a)))").verdict,
            Verdict::valid);
  EXPECT_EQ(check_text(decls + "(step i1 :rule inst_forall :conclusion (=> (forall ((x Int)) (p x)) (p (f a))) :binding ((x a)))").verdict,
            Verdict::invalid);
  EXPECT_EQ(check_text(decls + "(step i1 :rule inst_exists :conclusion (=> (p a) (exists ((x Int)) (p x))) :binding ((x a)))").verdict,
            Verdict::valid);
  EXPECT_EQ(check_text(decls + "(step i1 :rule inst_forall :conclusion (=> (forall ((g (-> Int Int))) (q g)) (q (lambda ((x Int)) x))) "
                               ":binding ((g (lambda ((x Int)) x))))")
                .verdict,
            Verdict::valid);
  EXPECT_EQ(check_text(decls + "(step i1 :rule inst_exists :conclusion (=> (p a) (forall ((x Int)) (p x))) :binding ((x a)))").verdict,
            Verdict::invalid);
}

TEST(Checker, CertificateLevelConditions) {
  std::string decls = kDecls;
  CheckReport ctx = check_text(decls + "(step s1 :rule refl :context ((map (x a))) :conclusion (= x a))");
  EXPECT_EQ(ctx.verdict, Verdict::invalid);
  EXPECT_NE(ctx.message.find("context"), std::string::npos);

  EXPECT_THROW(parse_certificate(decls + "(step s1 :rule refl :conclusion (= a a))\n(step s1 :rule refl :conclusion (= a a))"),
               Error);

  CheckReport forward = check_text(decls + "(step s1 :rule trans :premises (s2 s3) :conclusion (= a a))\n"
                                           "(step s2 :rule refl :conclusion (= a a))\n(step s3 :rule refl :conclusion (= a a))");
  EXPECT_EQ(forward.verdict, Verdict::invalid);
  EXPECT_EQ(*forward.first_failure, 0u);
}

TEST(Checker, RuleLocality) {
  // check_rule sees only the step and its premises.
  Certificate c = golden("example2");
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    std::vector<const ProofStep*> ps;
    for (const auto& id : c.steps[i].premises) ps.push_back(c.find(id));
    EXPECT_EQ(check_rule(c.steps[i], ps).status, StepStatus::ok) << c.steps[i].id;
  }
}

TEST(Checker, BetaAndLetAgree) {
  // (λx. p x) a and (let ((x a)) (p x)) have the same premises.
  std::string decls = kDecls;
  std::string prem = "(step s1 :rule refl :conclusion (= a a))\n"
                     "(step s2 :rule refl :context ((map (x a))) :conclusion (= (p x) (p a)))\n";
  EXPECT_EQ(check_text(decls + prem + "(step s3 :rule beta :premises (s1 s2) :conclusion (= ((lambda ((x Int)) (p x)) a) (p a)))").verdict,
            Verdict::valid);
  EXPECT_EQ(check_text(decls + prem + "(step s3 :rule let :premises (s1 s2) :conclusion (= (let ((x a)) (p x)) (p a)))").verdict,
            Verdict::valid);
}

TEST(Mutations, KitIsMostlyRejected) {
  std::size_t total = 0, rejected = 0;
  for (const char* g : {"example1", "example2", "example3"}) {
    for (const auto& m : testing::mutation_kit(golden(g))) {
      ++total;
      if (check_certificate(m.cert).verdict != Verdict::valid) ++rejected;
    }
  }
  ASSERT_GT(total, 100u);
  EXPECT_GE(static_cast<double>(rejected) / static_cast<double>(total), 0.95);
}

TEST(Mutations, SideConditionsAreAlwaysRejected) {
  std::size_t n = 0;
  for (const char* g : {"example1", "example2", "example3"}) {
    Certificate c = golden(g);
    for (const auto& m : testing::side_condition_mutants(c)) {
      ++n;
      std::vector<const ProofStep*> ps;
      for (const auto& p : m.premises) ps.push_back(&p);
      StepCheck s = check_rule(m.step, ps);
      EXPECT_EQ(s.status, StepStatus::failed) << m.description;
      EXPECT_NE(s.message.find("side condition"), std::string::npos) << m.description << ": " << s.message;
    }
  }
  EXPECT_GE(n, 8u);
}

}  // namespace
}  // namespace hosmt
