#include <doctest.h>

#include <cmath>
#include <vector>

#include "choqlab/axioms.hpp"
#include "choqlab/builtins.hpp"
#include "choqlab/errors.hpp"
#include "choqlab/lovasz.hpp"
#include "choqlab/setfn.hpp"

using namespace choqlab;

namespace {

const RealFn& builtin_fn(std::string_view name) {
  const Builtin* b = find_builtin(name);
  REQUIRE(b != nullptr);
  return b->fn;
}

CheckConfig quick(std::uint64_t seed = 0, std::uint64_t trials = 500) {
  CheckConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  return cfg;
}

bool same_witness(const Verdict& a, const Verdict& b) {
  if (a.passed != b.passed || a.trials != b.trials) return false;
  if (a.witness.has_value() != b.witness.has_value()) return false;
  if (!a.witness) return true;
  const Witness& wa = *a.witness;
  const Witness& wb = *b.witness;
  return wa.x == wb.x && wa.x2 == wb.x2 && wa.cut == wb.cut && wa.lhs == wb.lhs &&
         wa.rhs == wb.rhs && wa.gap == wb.gap && wa.note == wb.note;
}

}  // namespace

TEST_CASE("builtin demo functions hit the expected verdicts") {
  const RealFn& min2 = builtin_fn("min2");
  const RealFn& max2 = builtin_fn("max2");
  const RealFn& prod = builtin_fn("product2");
  const RealFn& abs1 = builtin_fn("abs1");
  const CheckConfig cfg = quick(7);

  for (const RealFn* f : {&min2, &max2}) {
    CHECK(check_comonotonic_additivity(*f, 2, cfg).passed);
    CHECK(check_horizontal_min_additivity(*f, 2, cfg).passed);
    CHECK(check_horizontal_max_additivity(*f, 2, cfg).passed);
    CHECK(check_horizontal_median_additivity(*f, 2, cfg).passed);
    CHECK(check_splitting(*f, 2, cfg).passed);
    CHECK(check_homogeneity(*f, 2, cfg, true).passed);
    CHECK_FALSE(check_homogeneity(*f, 2, cfg, false).passed);
    CHECK_FALSE(check_oddness_positive_orthant(*f, 2, cfg).passed);
  }

  CHECK_FALSE(check_comonotonic_additivity(prod, 2, cfg).passed);
  CHECK_FALSE(check_horizontal_min_additivity(prod, 2, cfg).passed);
  CHECK_FALSE(check_horizontal_max_additivity(prod, 2, cfg).passed);
  CHECK_FALSE(check_homogeneity(prod, 2, cfg, true).passed);

  CHECK_FALSE(check_comonotonic_additivity(abs1, 1, cfg).passed);
  CHECK_FALSE(check_horizontal_min_additivity(abs1, 1, cfg).passed);
  CHECK_FALSE(check_horizontal_max_additivity(abs1, 1, cfg).passed);
  CHECK(check_horizontal_median_additivity(abs1, 1, cfg).passed);
  CHECK(check_positive_horizontal_min_additivity(abs1, 1, cfg).passed);
  CHECK(check_negative_horizontal_max_additivity(abs1, 1, cfg).passed);
  CHECK(check_splitting(abs1, 1, cfg).passed);
  CHECK(check_homogeneity(abs1, 1, cfg, true).passed);
  CHECK_FALSE(check_homogeneity(abs1, 1, cfg, false).passed);
  CHECK_FALSE(check_oddness_positive_orthant(abs1, 1, cfg).passed);
}

TEST_CASE("documented sweep counterexample for the product") {
  const Verdict v = check_comonotonic_additivity(builtin_fn("product2"), 2, quick(0, 1000));
  REQUIRE_FALSE(v.passed);
  CHECK(v.trials == 1);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->x == Vec{-2, -2});
  CHECK(v.witness->x2 == Vec{-2, -2});
  CHECK(v.witness->lhs == 16.0);
  CHECK(v.witness->rhs == 8.0);
}

TEST_CASE("every telescoping extension is comonotonically additive") {
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + trial % 4;
    const SetFunctionKind kind =
        trial % 3 == 0 ? SetFunctionKind::general
                       : (trial % 3 == 1 ? SetFunctionKind::capacity
                                         : SetFunctionKind::capacity_normalized);
    const SetFunction phi = random_set_function(n, 880 + trial, kind);
    const RealFn f = as_function(LovaszExtension(phi));
    const CheckConfig cfg = quick(trial);
    CHECK(check_comonotonic_additivity(f, n, cfg).passed);
    // Implied by comonotonic additivity: the parts of each horizontal
    // decomposition are comonotonic, so the sums split.
    CHECK(check_horizontal_min_additivity(f, n, cfg).passed);
    CHECK(check_horizontal_max_additivity(f, n, cfg).passed);
    CHECK(check_horizontal_median_additivity(f, n, cfg).passed);
    CHECK(check_splitting(f, n, cfg).passed);
    CHECK(check_positive_comonotonic_additivity(f, n, cfg).passed);
    CHECK(check_negative_comonotonic_additivity(f, n, cfg).passed);
    CHECK(check_homogeneity(f, n, cfg, true).passed);
  }
}

TEST_CASE("symmetric extensions add full homogeneity and oddness") {
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 1 + trial % 4;
    const SetFunction phi = random_set_function(n, 990 + trial, SetFunctionKind::capacity);
    const RealFn f = as_function(SymmetricLovaszExtension(phi));
    const CheckConfig cfg = quick(trial);
    CHECK(check_homogeneity(f, n, cfg, false).passed);
    CHECK(check_oddness_positive_orthant(f, n, cfg).passed);
    CHECK(check_horizontal_median_additivity(f, n, cfg).passed);
    CHECK(check_splitting(f, n, cfg).passed);
  }
}

TEST_CASE("two-table extensions satisfy the one-sided family") {
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 4;
    const SetFunction pos = random_set_function(n, 1200 + trial, SetFunctionKind::capacity);
    const SetFunction neg = random_set_function(n, 1700 + trial, SetFunctionKind::capacity);
    const RealFn f = as_function(MedianAdditiveExtension(pos, neg));
    const CheckConfig cfg = quick(trial);
    CHECK(check_horizontal_median_additivity(f, n, cfg).passed);
    CHECK(check_positive_horizontal_min_additivity(f, n, cfg).passed);
    CHECK(check_negative_horizontal_max_additivity(f, n, cfg).passed);
    CHECK(check_splitting(f, n, cfg).passed);
    CHECK(check_positive_comonotonic_additivity(f, n, cfg).passed);
    CHECK(check_negative_comonotonic_additivity(f, n, cfg).passed);
    CHECK(check_homogeneity(f, n, cfg, true).passed);
  }
}

TEST_CASE("a mismatched pair of tables breaks unrestricted comonotonic additivity") {
  const MedianAdditiveExtension m(make_set_function(2, {0, 0.3, 0.6, 1}),
                                  make_set_function(2, {0, 0.5, 0.5, 1}));
  const Verdict v = check_comonotonic_additivity(as_function(m), 2, quick(0, 2000));
  REQUIRE_FALSE(v.passed);
  REQUIRE(v.witness.has_value());
  // The violation shows up with one vector crossing zero.
  const Witness& w = *v.witness;
  const double lo = std::min({w.x[0], w.x[1], w.x2[0], w.x2[1]});
  const double hi = std::max({w.x[0], w.x[1], w.x2[0], w.x2[1]});
  CHECK(lo < 0.0);
  CHECK(hi > 0.0);
}

TEST_CASE("restricted axioms reject one-sided domains") {
  const RealFn& min2 = builtin_fn("min2");
  CheckConfig cfg = quick();
  for (const DomainSpec& d : {DomainSpec::nonneg(), DomainSpec::nonpos(), DomainSpec::box(-1, 2)}) {
    cfg.domain = d;
    CHECK_THROWS_AS(check_horizontal_median_additivity(min2, 2, cfg), DomainKindError);
    CHECK_THROWS_AS(check_splitting(min2, 2, cfg), DomainKindError);
    CHECK_THROWS_AS(check_oddness_positive_orthant(min2, 2, cfg), DomainKindError);
    CHECK_THROWS_AS(check_positive_comonotonic_additivity(min2, 2, cfg), DomainKindError);
    CHECK_THROWS_AS(check_negative_comonotonic_additivity(min2, 2, cfg), DomainKindError);
    CHECK_THROWS_AS(check_positive_horizontal_min_additivity(min2, 2, cfg), DomainKindError);
    CHECK_THROWS_AS(check_negative_horizontal_max_additivity(min2, 2, cfg), DomainKindError);
  }
}

TEST_CASE("unrestricted axioms accept every domain kind") {
  const SetFunction phi = make_set_function(2, {0, 0.3, 0.6, 1});
  const RealFn f = as_function(LovaszExtension(phi));
  CheckConfig cfg = quick(3, 400);
  for (const DomainSpec& d :
       {DomainSpec::full_line(), DomainSpec::nonneg(), DomainSpec::nonpos(),
        DomainSpec::centered(2.5), DomainSpec::box(-1, 3)}) {
    cfg.domain = d;
    CHECK(check_comonotonic_additivity(f, 2, cfg).passed);
    CHECK(check_horizontal_min_additivity(f, 2, cfg).passed);
    CHECK(check_horizontal_max_additivity(f, 2, cfg).passed);
    CHECK(check_homogeneity(f, 2, cfg, true).passed);
  }
}

TEST_CASE("verdicts are reproducible and partition independent") {
  const RealFn& prod = builtin_fn("product2");
  const RealFn& min2 = builtin_fn("min2");

  CheckConfig cfg = quick(99, 2000);
  const Verdict a = check_horizontal_min_additivity(prod, 2, cfg);
  const Verdict b = check_horizontal_min_additivity(prod, 2, cfg);
  CHECK(same_witness(a, b));
  REQUIRE_FALSE(a.passed);

  cfg.jobs = 4;
  const Verdict c = check_horizontal_min_additivity(prod, 2, cfg);
  CHECK(same_witness(a, c));

  // Passing runs also agree on the trial count across partitions.
  CheckConfig pass_cfg = quick(5, 3000);
  const Verdict p1 = check_comonotonic_additivity(min2, 2, pass_cfg);
  pass_cfg.jobs = 3;
  const Verdict p2 = check_comonotonic_additivity(min2, 2, pass_cfg);
  CHECK(p1.passed);
  CHECK(same_witness(p1, p2));
}

TEST_CASE("trial accounting separates the sweep from the random phase") {
  // n = 2 on the full line sweeps 5^2 vectors x 5 cuts = 125 cases.
  CheckConfig cfg = quick(0, 2000);
  const Verdict pass = check_horizontal_min_additivity(builtin_fn("min2"), 2, cfg);
  CHECK(pass.passed);
  CHECK(pass.trials == 2125);

  // A first-sweep-case failure stops counting immediately.
  const Verdict fail = check_comonotonic_additivity(builtin_fn("product2"), 2, cfg);
  CHECK_FALSE(fail.passed);
  CHECK(fail.trials == 1);

  // Above the sweep dimension cap only random trials run.
  const SetFunction phi = random_set_function(5, 321, SetFunctionKind::capacity);
  const RealFn f = as_function(LovaszExtension(phi));
  CheckConfig big = quick(1, 250);
  const Verdict high_dim = check_horizontal_min_additivity(f, 5, big);
  CHECK(high_dim.passed);
  CHECK(high_dim.trials == 250);
}

TEST_CASE("bounded domains keep every sampled case inside") {
  // The samplers assert closure internally and would throw logic_error
  // if a case escaped its domain, so a clean pass doubles as a check.
  const SetFunction phi = random_set_function(3, 8, SetFunctionKind::capacity);
  const RealFn f = as_function(SymmetricLovaszExtension(phi));
  for (const DomainSpec& d : {DomainSpec::centered(1.5), DomainSpec::full_line()}) {
    CheckConfig cfg = quick(11, 1500);
    cfg.domain = d;
    // Same-sign comonotonic checks only: the symmetric extension is not
    // additive across comonotonic pairs of mixed sign (abs1 is the n=1 case).
    CHECK(check_positive_comonotonic_additivity(f, 3, cfg).passed);
    CHECK(check_negative_comonotonic_additivity(f, 3, cfg).passed);
    CHECK(check_horizontal_median_additivity(f, 3, cfg).passed);
    CHECK(check_splitting(f, 3, cfg).passed);
    CHECK(check_homogeneity(f, 3, cfg, false).passed);
    CHECK(check_oddness_positive_orthant(f, 3, cfg).passed);
  }
  const RealFn raw = as_function(LovaszExtension(phi));
  for (const DomainSpec& d : {DomainSpec::box(-1, 2), DomainSpec::nonneg()}) {
    CheckConfig cfg = quick(12, 1500);
    cfg.domain = d;
    CHECK(check_comonotonic_additivity(raw, 3, cfg).passed);
    CHECK(check_horizontal_min_additivity(raw, 3, cfg).passed);
    CHECK(check_horizontal_max_additivity(raw, 3, cfg).passed);
  }
}

TEST_CASE("diagonal section reports break the failure down by subset") {
  const DiagonalReport rep = check_diagonal_sections(builtin_fn("min2"), 2, quick(0, 400));
  REQUIRE(rep.sections.size() == 4);
  CHECK(rep.overall.passed);
  CHECK(rep.min_lemma());
  CHECK(rep.max_lemma());
  REQUIRE(rep.diagonal_odd.has_value());
  CHECK(rep.diagonal_odd->passed);
  for (const SectionReport& sr : rep.sections) {
    CHECK(sr.additive_pos.passed);
    CHECK(sr.additive_neg.passed);
    REQUIRE(sr.additive_full.has_value());
  }
  // min(t, 0) is additive on each half-line but not across zero.
  CHECK(rep.sections[0].additive_full->passed);
  CHECK_FALSE(rep.sections[1].additive_full->passed);
  CHECK_FALSE(rep.sections[2].additive_full->passed);
  CHECK(rep.sections[3].additive_full->passed);

  // abs1 breaks one-sided additivity nowhere but oddness everywhere.
  const DiagonalReport arep = check_diagonal_sections(builtin_fn("abs1"), 1, quick(0, 400));
  REQUIRE(arep.sections.size() == 2);
  CHECK(arep.sections[1].additive_pos.passed);
  CHECK(arep.sections[1].additive_neg.passed);
  CHECK_FALSE(arep.sections[1].additive_full->passed);
  REQUIRE(arep.diagonal_odd.has_value());
  CHECK_FALSE(arep.diagonal_odd->passed);
  CHECK_FALSE(arep.overall.passed);
  CHECK_FALSE(arep.min_lemma());

  // One-sided domains drop the mixed sub-verdicts and the oddness part.
  CheckConfig half = quick(0, 400);
  half.domain = DomainSpec::nonneg();
  const DiagonalReport hrep = check_diagonal_sections(builtin_fn("min2"), 2, half);
  for (const SectionReport& sr : hrep.sections) CHECK_FALSE(sr.additive_full.has_value());
  CHECK_FALSE(hrep.diagonal_odd.has_value());
  CHECK(hrep.overall.passed);
}

TEST_CASE("axiom names round-trip through the dispatcher") {
  const Axiom all[] = {
      Axiom::comonotonic,          Axiom::horizontal_min,
      Axiom::horizontal_max,       Axiom::horizontal_median,
      Axiom::positive_comonotonic, Axiom::negative_comonotonic,
      Axiom::positive_horizontal_min, Axiom::negative_horizontal_max,
      Axiom::splitting,            Axiom::diagonal,
      Axiom::homogeneity,          Axiom::oddness_positive,
  };
  for (Axiom a : all) {
    const auto back = axiom_from_name(axiom_name(a));
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
  CHECK_FALSE(axiom_from_name("no-such-axiom").has_value());

  const CheckConfig cfg = quick(0, 300);
  CHECK(check_axiom(builtin_fn("min2"), 2, Axiom::horizontal_min, cfg).passed);
  CHECK_FALSE(check_axiom(builtin_fn("min2"), 2, Axiom::homogeneity, cfg).passed);
  CHECK_FALSE(check_axiom(builtin_fn("abs1"), 1, Axiom::diagonal, cfg).passed);
}

TEST_CASE("witnesses satisfy their own inequality when re-evaluated") {
  const RealFn& prod = builtin_fn("product2");
  const Verdict v = check_horizontal_min_additivity(prod, 2, quick(17, 1500));
  REQUIRE_FALSE(v.passed);
  REQUIRE(v.witness.has_value());
  const Witness& w = *v.witness;
  REQUIRE(w.cut.has_value());
  const double c = *w.cut;
  const double lhs = prod(w.x);
  const Vec low = meet_scalar(w.x, c);
  const Vec up = cut_above(w.x, c);
  const double rhs = prod(low) + prod(up);
  CHECK(lhs == w.lhs);
  CHECK(rhs == w.rhs);
  CHECK(std::fabs(lhs - rhs) > 1e-9);
}
