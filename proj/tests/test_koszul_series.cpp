#include "doctest.h"
#include "oracle.hpp"
#include "operad/catalog.hpp"
#include "operad/free_expansion.hpp"
#include "operad/koszul_series.hpp"

using namespace operad;

namespace {

PowerSeries series(std::size_t order, std::vector<long> cs) {
  std::vector<Rational> out(order + 1, Rational(0));
  for (std::size_t k = 0; k < cs.size() && k <= order; ++k) out[k] = Rational(cs[k]);
  return PowerSeries(order, out);
}

// Independent: -t/(1+t) = sum_{n>=1} (-1)^n t^n.
PowerSeries minus_t_over_one_plus_t(std::size_t order) {
  PowerSeries f(order);
  for (std::size_t n = 1; n <= order; ++n) f[n] = Rational(n % 2 ? -1 : 1);
  return f;
}

// t/(1-4t) = sum 4^{n-1} t^n; its inverse is t/(1+4t).
PowerSeries geometric(std::size_t order, long ratio) {
  PowerSeries f(order);
  Rational c(1);
  for (std::size_t n = 1; n <= order; ++n) {
    f[n] = c;
    c *= ratio;
  }
  return f;
}

DimSeries dims_of(std::vector<std::size_t> d) { return DimSeries{std::move(d)}; }

}  // namespace

TEST_CASE("signed series examples") {
  CHECK(signed_series(dims_of({1, 1, 1, 1})) == series(4, {0, -1, 1, -1, 1}));
  CHECK(signed_series(dims_of({1, 4, 16, 64})) == series(4, {0, -1, 4, -16, 64}));
  CHECK(signed_series(dims_of({1, 2, 5, 14})) == series(4, {0, -1, 2, -5, 14}));
  CHECK_THROWS(signed_series(dims_of({2, 1})));
}

TEST_CASE("composition examples") {
  const auto t = PowerSeries::variable(6);
  const auto f = series(6, {0, -1, 3, 0, 7, -2, 1});
  CHECK(compose(f, t, 6) == f);
  CHECK(compose(t, f, 6) == f);
  const auto m = minus_t_over_one_plus_t(8);
  CHECK(compose(m, m, 8) == PowerSeries::variable(8));
  const auto g = geometric(8, 4);
  CHECK(compose(g, geometric(8, -4), 8) == PowerSeries::variable(8));
  CHECK(compositional_inverse(g, 8) == geometric(8, -4));
  CHECK(compose(g, compositional_inverse(g, 8), 8) == PowerSeries::variable(8));
}

TEST_CASE("property: compositional inverse") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    PowerSeries f(7);
    f[1] = Rational(rng() % 2 ? 1 : -1);
    for (std::size_t k = 2; k <= 7; ++k) f[k] = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
    const auto inv = compositional_inverse(f, 7);
    CHECK(compose(f, inv, 7) == PowerSeries::variable(7));
    CHECK(compose(inv, f, 7) == PowerSeries::variable(7));
  }
  CHECK_THROWS(compositional_inverse(series(3, {0, 2, 1}), 3));
}

TEST_CASE("generating-series defects") {
  const auto as = dims_of({1, 1, 1, 1, 1, 1});
  CHECK(gk_defect(as, as, 6).is_zero());
  CHECK(gk_defect(dims_of({1, 2, 5, 14}), dims_of({1, 2, 3, 4}), 4).is_zero());
  // Computed dims, not typed in.
  const auto dend = DimSeries{component_dims(builtin("Dend"), 5)};
  const auto dias = DimSeries{component_dims(builtin("Dias"), 5)};
  CHECK(gk_defect(dend, dias, 5).is_zero());
  CHECK(gk_defect(dias, dend, 5).is_zero());
  CHECK(gk_defect(dims_of({1, 4, 16, 64}), dims_of({1, 4, 16, 64}), 4).is_zero());
  // Odd arities are forced; the t^3 coefficient sees a wrong d_3.
  CHECK_FALSE(gk_defect(dims_of({1, 4, 15, 64}), dims_of({1, 4, 15, 64}), 4).is_zero());
  // Even arities cancel in the self-dual equation.
  CHECK(gk_defect(dims_of({1, 4, 16, 58}), dims_of({1, 4, 16, 58}), 4).is_zero());
  CHECK(format_series(PowerSeries(5)) == "0 + O(t^6)");
}

TEST_CASE("X+ and X- defects with computed dimensions") {
  for (const auto& [name, c5] : {std::pair{"Xplus", 54L}, std::pair{"Xminus", 100L}}) {
    const DimSeries d{component_dims(builtin(name), 5)};
    CHECK(gk_defect(d, d, 4).is_zero());
    const auto five = gk_defect(d, d, 5);
    CHECK(five == series(5, {0, 0, 0, 0, 0, c5}));
  }
}

TEST_CASE("low-order defect vanishes for any dual pair") {
  for (const auto& l : Catalog::standard().presentations) {
    const auto p = l.presentation();
    const auto d = gk_defect(DimSeries{component_dims(p, 3)}, DimSeries{component_dims(dual(p), 3)}, 3);
    CHECK_MESSAGE(d[1] == 0, l.name);
    CHECK_MESSAGE(d[2] == 0, l.name);
  }
}

TEST_CASE("predicted dimensions") {
  const auto one = predicted_dims(1, 6);
  CHECK(one.series.dims == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
  const auto four = predicted_dims(4, 5);
  CHECK(four.series.dims == std::vector<std::size_t>{1, 4, 16, 64, 256});
  CHECK(four.unconstrained_arities == std::vector<std::size_t>{2, 4});
  CHECK(four.consistent);
  const auto two = predicted_dims(2, 6);
  CHECK(two.series.dims == std::vector<std::size_t>{1, 2, 4, 8, 16, 32});
  for (std::size_t x2 = 1; x2 <= 6; ++x2) {
    const auto p = predicted_dims(x2, 6);
    CHECK(gk_defect(p.series, p.series, 6).is_zero());
  }
}
