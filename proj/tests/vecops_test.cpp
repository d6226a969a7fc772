#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "choqlab/errors.hpp"
#include "choqlab/rng.hpp"
#include "choqlab/vecops.hpp"

using namespace choqlab;

TEST_CASE("scalar meets, joins, cuts and clamps") {
  const Vec x{-3, 5};
  CHECK(meet_scalar(x, 2) == Vec{-3, 2});
  CHECK(join_scalar(x, -2) == Vec{-2, 5});
  CHECK(cut_above(x, 2) == Vec{0, 3});
  CHECK(cut_below(x, -2) == Vec{-1, 0});
  CHECK(med_clamp(x, 2) == Vec{-2, 2});
  CHECK(med_clamp(x, 0) == Vec{0, 0});
  CHECK(meet_scalar(x, 100) == x);
  CHECK(pos_part(x) == Vec{0, 5});
  CHECK(neg_part(x) == Vec{3, 0});
  CHECK_THROWS_AS(med_clamp(x, -1), NegativeCutError);
}

TEST_CASE("cut decompositions recompose exactly") {
  // Quarter-integer inputs keep every sum and difference exactly
  // representable, so the identities below can be checked with ==.
  Rng rng(2024);
  const auto quarter = [&rng] { return (double(rng.below(81)) - 40.0) * 0.25; };
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + int(rng.below(6));
    Vec x(static_cast<std::size_t>(n));
    for (double& v : x) v = quarter();
    const double c = quarter();

    const Vec low = meet_scalar(x, c);
    const Vec up = cut_above(x, c);
    const Vec high = join_scalar(x, c);
    const Vec down = cut_below(x, c);
    const Vec plus = pos_part(x);
    const Vec minus = neg_part(x);
    for (int i = 0; i < n; ++i) {
      CHECK(low[i] + up[i] == x[i]);
      CHECK(high[i] + down[i] == x[i]);
      CHECK(plus[i] - minus[i] == x[i]);
      CHECK(up[i] >= 0.0);
      CHECK(down[i] <= 0.0);
    }
    CHECK(are_comonotonic(low, up));
    CHECK(are_comonotonic(high, down));

    const double cc = std::fabs(c);
    const Vec mid = med_clamp(x, cc);
    const Vec above = cut_above(x, cc);
    const Vec below = cut_below(x, -cc);
    for (int i = 0; i < n; ++i) CHECK(mid[i] + above[i] + below[i] == x[i]);
  }
}

namespace {

bool sorts_both(const std::vector<int>& perm, const Vec& x, const Vec& y) {
  for (std::size_t i = 1; i < perm.size(); ++i) {
    if (x[perm[i - 1]] > x[perm[i]] || y[perm[i - 1]] > y[perm[i]]) return false;
  }
  return true;
}

bool comonotonic_by_search(const Vec& x, const Vec& y) {
  std::vector<int> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (sorts_both(perm, x, y)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("comonotonicity basics") {
  CHECK(are_comonotonic(Vec{1, 2}, Vec{3, 7}));
  CHECK_FALSE(are_comonotonic(Vec{1, 2}, Vec{3, 1}));
  CHECK(are_comonotonic(Vec{5, 5, 5}, Vec{9, -2, 0}));
  CHECK_THROWS_AS(are_comonotonic(Vec{1}, Vec{1, 2}), DimensionError);
}

TEST_CASE("pairwise criterion matches the common-permutation definition") {
  // Exhaustive over the small lattice.
  const double vals[] = {-1, 0, 1};
  for (int a = 0; a < 27; ++a) {
    for (int b = 0; b < 27; ++b) {
      Vec x{vals[a % 3], vals[(a / 3) % 3], vals[a / 9]};
      Vec y{vals[b % 3], vals[(b / 3) % 3], vals[b / 9]};
      CHECK(are_comonotonic(x, y) == comonotonic_by_search(x, y));
    }
  }
  // Random pairs in higher dimension.
  Rng rng(77);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 2 + int(rng.below(5));
    Vec x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    // Coarse integer values make agreeing and disagreeing pairs common.
    for (int i = 0; i < n; ++i) {
      x[i] = double(int(rng.below(5))) - 2.0;
      y[i] = double(int(rng.below(5))) - 2.0;
    }
    CHECK(are_comonotonic(x, y) == comonotonic_by_search(x, y));
  }
}

TEST_CASE("sort chains expose the documented permutations and masks") {
  const SortChain a = sort_chain(Vec{5, 3});
  CHECK(a.sigma == std::vector<int>{1, 0});
  CHECK(a.upper == std::vector<std::uint32_t>{0b11, 0b01, 0});
  CHECK(a.lower == std::vector<std::uint32_t>{0, 0b10, 0b11});
  CHECK(a.split == 0);

  const SortChain b = sort_chain(Vec{-3, 5});
  CHECK(b.sigma == std::vector<int>{0, 1});
  CHECK(b.split == 1);

  const SortChain ties = sort_chain(Vec{2, 2, 1});
  CHECK(ties.sigma == std::vector<int>{2, 0, 1});

  const SortChain zero = sort_chain(Vec{0.0, -0.0});
  CHECK(zero.split == 0);
}

TEST_CASE("forced permutations are validated") {
  const Vec x{2, 2, 1};
  const std::vector<int> ok{2, 1, 0};
  const SortChain chain = sort_chain(x, ok);
  CHECK(chain.sigma == ok);

  CHECK_THROWS_AS(sort_chain(x, std::vector<int>{0, 1}), DimensionError);
  CHECK_THROWS_AS(sort_chain(x, std::vector<int>{0, 0, 1}), ValueError);
  CHECK_THROWS_AS(sort_chain(x, std::vector<int>{0, 1, 2}), ValueError);
}

TEST_CASE("domains contain zero and respect their bounds") {
  const DomainSpec full = DomainSpec::full_line();
  const DomainSpec pos = DomainSpec::nonneg();
  const DomainSpec neg = DomainSpec::nonpos();
  const DomainSpec cen = DomainSpec::centered(3);
  const DomainSpec box = DomainSpec::box(-1, 2);

  for (const DomainSpec& d : {full, pos, neg, cen, box}) CHECK(in_domain(0.0, d));

  CHECK(in_domain(Vec{-1, 2}, cen));
  CHECK_FALSE(in_domain(Vec{-1, 2}, pos));
  CHECK(in_domain(Vec{-1, 2}, box));
  CHECK_FALSE(in_domain(Vec{-1.5, 0}, box));
  CHECK_FALSE(in_domain(3.5, cen));
  CHECK(in_domain(-1e18, full));
  CHECK_FALSE(in_domain(-1e-12, pos));

  CHECK(full.symmetric());
  CHECK(cen.symmetric());
  CHECK_FALSE(pos.symmetric());
  CHECK_FALSE(box.symmetric());

  CHECK_THROWS_AS(DomainSpec::centered(0), ValueError);
  CHECK_THROWS_AS(DomainSpec::centered(-2), ValueError);
  CHECK_THROWS_AS(DomainSpec::box(1, 2), ValueError);
  CHECK_THROWS_AS(DomainSpec::box(-1, -0.5), ValueError);
  CHECK_THROWS_AS(DomainSpec::box(0, 0), ValueError);
}
