#include <catch_amalgamated.hpp>

#include <thread>

#include "seqproof/series.hpp"
#include "seqproof/special.hpp"
#include "support/oracles.hpp"

using namespace seqproof;

TEST_CASE("log1p series", "[series]") {
  CHECK(series_log1p(3).coeffs() == std::vector<Rational>{0, 1, Rational(-1, 2), Rational(1, 3)});
  CHECK(series_log1p(0).coeffs() == std::vector<Rational>{0});
  CHECK(series_log1p(5)[5] == Rational(1, 5));
  CHECK_THROWS_AS(series_log1p(-1), DomainError);
}

TEST_CASE("series multiplication", "[series]") {
  const TruncatedSeries one_plus_x = TruncatedSeries::polynomial({1, 1}, 2);
  CHECK((one_plus_x * one_plus_x).coeffs() == std::vector<Rational>{1, 2, 1});
  CHECK((series_log1p(6) * TruncatedSeries(6)).is_zero());

  // orders differ: truncate to the smaller one
  CHECK(series_mul(series_log1p(8), one_plus_x).order() == 2);

  // (log(1+x))^2/2 * (1+x)^2 at x^4 is -1/24, i.e. a(4) = -1
  const TruncatedSeries half_log_sq = series_log1p(4) * series_log1p(4) * Rational(1, 2);
  const TruncatedSeries f = half_log_sq * TruncatedSeries::polynomial({1, 2, 1}, 4);
  CHECK(f[4] == Rational(-1, 24));
}

TEST_CASE("series product is commutative and associative", "[series][property]") {
  oracle::Gen gen(oracle::kSeed + 10);
  for (int i = 0; i < oracle::kPropertyCases; ++i) {
    const auto oa = static_cast<std::size_t>(gen.integer(0, 64));
    const auto ob = static_cast<std::size_t>(gen.integer(0, 64));
    const auto oc = static_cast<std::size_t>(gen.integer(0, 64));
    const TruncatedSeries a = gen.series(oa), b = gen.series(ob), c = gen.series(oc);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE((a * b).order() == std::min(oa, ob));
  }
}

TEST_CASE("derivative consistency of log(1+x)", "[series][property]") {
  for (std::int64_t order = 1; order <= 80; ++order) {
    const TruncatedSeries d = series_log1p(order).derivative();
    const TruncatedSeries lhs = TruncatedSeries::polynomial({1, 1}, d.order()) * d;
    REQUIRE(lhs == TruncatedSeries::polynomial({1}, d.order()));
  }
}

TEST_CASE("build_F", "[series]") {
  const TruncatedSeries f = build_F(7);
  CHECK(f[0] == Rational(0));
  CHECK(f[1] == Rational(0));
  CHECK(f[2] == Rational(1, 2));
  // -28 / 7!, oracle: a(7) = -28 divided by 5040
  CHECK(f[7] == Rational(-28, 5040));
  CHECK(f[7] == oracle::a045406(7) / Rational(oracle::factorial_loop(7)));
  CHECK_THROWS_AS(build_F(1), DomainError);
}

TEST_CASE("e.g.f. coefficients reproduce the printed A045406 values", "[series]") {
  const SequenceTable t = egf_coefficients(build_F(12), 2);
  CHECK(t.offset() == 2);
  CHECK(t.provenance() == Provenance::Egf);
  const std::vector<std::int64_t> printed = {1, 3, -1, 0, 4, -28, 188, -1368, 11016, -98208};
  for (std::size_t i = 0; i < printed.size(); ++i) CHECK(t.at(2 + static_cast<std::int64_t>(i)) == printed[i]);
  CHECK(t.at(5) == 0);
  // n = 12 from the exact closed-form oracle (2 H_9 - 3) 9! = 964512
  CHECK(oracle::a045406(12) == Rational(964512));
  CHECK(t.at(12) == 964512);
  CHECK_THROWS_AS(t.at(13), RangeError);
  CHECK_THROWS_AS(t.at(1), RangeError);
}

TEST_CASE("e.g.f. coefficient extraction rejects non-integral values", "[series]") {
  // log(1+x) has 1! * (-1/2) * 2! ... n! (-1)^(n+1)/n = (-1)^(n+1) (n-1)!: integral
  CHECK_NOTHROW(egf_coefficients(series_log1p(10)));
  // 1/3 x^2: 2! / 3 is not an integer
  CHECK_THROWS_AS(egf_coefficients(TruncatedSeries::polynomial({0, 0, Rational(1, 3)}, 2)), NonIntegerError);
}

TEST_CASE("(log(1+x))^2/2 coefficients equal (-1)^n H(n-1)/n", "[series][property]") {
  const TruncatedSeries half_log_sq = series_log1p(300) * series_log1p(300) * Rational(1, 2);
  for (std::int64_t n = 2; n <= 300; ++n) {
    Rational expect = oracle::harmonic_direct(n - 1) / Rational(n);
    if (n % 2) expect = -expect;
    REQUIRE(half_log_sq[static_cast<std::size_t>(n)] == expect);
  }
}

TEST_CASE("harmonic numbers", "[special]") {
  CHECK(harmonic(0) == Rational(0));
  CHECK(harmonic(3) == Rational(11, 6));
  CHECK(harmonic(4) == Rational(25, 12));
  CHECK(harmonic(4) == oracle::harmonic_direct(4));
  CHECK_THROWS_AS(harmonic(-1), DomainError);
}

TEST_CASE("harmonic telescoping H(m+1) - H(m) = 1/(m+1)", "[special][property]") {
  for (std::int64_t m = 0; m <= 10000; ++m) REQUIRE(harmonic(m + 1) - harmonic(m) == Rational(1, m + 1));
  CHECK(harmonic(500) == oracle::harmonic_direct(500));
}

TEST_CASE("harmonic table is safe for concurrent readers", "[special]") {
  HarmonicTable table;
  std::vector<Rational> results(8);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 8; ++t) pool.emplace_back([&, t] { results[t] = table(300 + 50 * t); });
  }
  for (int t = 0; t < 8; ++t) CHECK(results[t] == oracle::harmonic_direct(300 + 50 * t));
}

TEST_CASE("factorial", "[special]") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == oracle::factorial_loop(20));
  CHECK(to_string(factorial(20)) == "2432902008176640000");
  CHECK_THROWS_AS(factorial(-1), DomainError);
}

TEST_CASE("Stirling cycle numbers", "[special]") {
  CHECK(stirling_cycle(3, 2) == 3);
  CHECK(stirling_cycle(4, 2) == 11);
  CHECK(Rational(factorial(3)) * harmonic(3) == Rational(11));
  for (std::int64_t n = 0; n <= 10; ++n) CHECK(stirling_cycle(n, n) == 1);
  CHECK(stirling_cycle(0, 0) == 1);
  CHECK(stirling_cycle(5, 0) == 0);
  CHECK(stirling_cycle(3, 5) == 0);
  CHECK(stirling_cycle(-1, 0) == 0);
  // row 5: 24 50 35 10 1
  CHECK(stirling_cycle(5, 1) == 24);
  CHECK(stirling_cycle(5, 2) == 50);
  CHECK(stirling_cycle(5, 3) == 35);
}

TEST_CASE("Stirling bridge c(n,2) = (n-1)! H(n-1)", "[special][property]") {
  for (std::int64_t n = 2; n <= 300; ++n)
    REQUIRE(Rational(stirling_cycle(n, 2)) == Rational(oracle::factorial_loop(n - 1)) * oracle::harmonic_direct(n - 1));
}

TEST_CASE("A045406 closed form", "[special]") {
  CHECK(closed_form_A045406(3) == 3);
  CHECK(closed_form_A045406(6) == 4);
  CHECK(closed_form_A045406(7) == -28);
  CHECK_THROWS_AS(closed_form_A045406(2), DomainError);
  for (std::int64_t n = 3; n <= 60; ++n) REQUIRE(Rational(closed_form_A045406(n)) == oracle::a045406(n));
}

TEST_CASE("A001711 closed form", "[special]") {
  // direct evaluation of (1/4)(n+3)!(2 H(n+3) - 3)
  CHECK(oracle::a001711(0) == Rational(1));
  CHECK(oracle::a001711(1) == Rational(7));
  CHECK(closed_form_A001711(0) == 1);
  CHECK(closed_form_A001711(1) == 7);
  CHECK(closed_form_A001711(2) == 47);
  for (std::int64_t n = 0; n <= 50; ++n) {
    REQUIRE(closed_form_A001711(n) > 0);
    REQUIRE(Rational(closed_form_A001711(n)) == oracle::a001711(n));
  }
  CHECK_THROWS_AS(closed_form_A001711(-1), DomainError);
}

TEST_CASE("non-integral closed forms are reported", "[special]") {
  HarmonicClosedForm odd{"test", 1, Rational(1, 7), 0, 0, 0};
  CHECK_THROWS_AS(odd(1), NonIntegerError);  // (1/7) 1! (2 - 3)
  CHECK(odd.value(1) == Rational(-1, 7));
}

TEST_CASE("closed form and e.g.f. agree through n = 200", "[series][property]") {
  const SequenceTable egf = egf_coefficients(build_F(200));
  const SequenceTable cf = a045406_closed_form().table(3, 200);
  CHECK(egf.slice(3, 200) == cf);
}
