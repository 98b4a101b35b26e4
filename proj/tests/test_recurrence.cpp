#include <catch_amalgamated.hpp>

#include <type_traits>

#include "seqproof/cases.hpp"
#include "seqproof/linalg.hpp"
#include "seqproof/recurrence.hpp"
#include "seqproof/series.hpp"
#include "support/oracles.hpp"

using namespace seqproof;

namespace {

const Polynomial kN = Polynomial::n();

PRecurrence mathar() {
  return PRecurrence({Polynomial(1), Polynomial(2) * kN - Polynomial(7), Polynomial::linear(Rational(-4)).pow(2)}, 5);
}
PRecurrence twin() {
  return PRecurrence({Polynomial(1), -(Polynomial(2) * kN + Polynomial(5)), Polynomial::linear(Rational(2)).pow(2)}, 2);
}

SequenceTable printed_a045406() {
  std::vector<BigInt> v;
  for (long x : {1L, 3L, -1L, 0L, 4L, -28L, 188L, -1368L, 11016L, -98208L}) v.emplace_back(x);
  return {2, v, Provenance::BFile};
}

}  // namespace

TEST_CASE("recurrence construction", "[recurrence]") {
  CHECK(mathar().order() == 2);
  CHECK(mathar().str() == "p0 = 1; p1 = 2*n - 7; p2 = (n-4)^2; from = 5");
  CHECK(twin().str() == "p0 = 1; p1 = -2*n - 5; p2 = (n+2)^2; from = 2");
  CHECK_THROWS_AS(PRecurrence({Polynomial(), Polynomial(1)}, 0), DomainError);
  CHECK_THROWS_AS(PRecurrence({Polynomial(1)}, 0), DomainError);
  CHECK_THROWS_AS(PRecurrence({Polynomial(Rational(1, 2)), Polynomial(1)}, 0), DomainError);
}

TEST_CASE("canonical form", "[recurrence]") {
  // (n+1) * 6 * mathar, sign flipped
  std::vector<Polynomial> scaled;
  const PRecurrence base = mathar();
  for (const auto& p : base.coeffs()) scaled.push_back(p * Polynomial::linear(Rational(1)) * Polynomial(-6));
  CHECK(canonical_coeffs(scaled) == mathar().coeffs());
  CHECK(canonical(mathar()) == mathar());

  std::vector<Polynomial> halves = {Polynomial(Rational(1, 2)), Polynomial(Rational(1, 3)) * kN};
  CHECK(canonical_coeffs(halves) == std::vector<Polynomial>{Polynomial(3), Polynomial(2) * kN});
}

TEST_CASE("residuals on the printed values", "[recurrence]") {
  const SequenceTable t = printed_a045406();
  CHECK(residual(mathar(), t, 6) == 0);
  CHECK(residual(mathar(), t, 7) == 0);
  for (std::int64_t n = 5; n <= 11; ++n) CHECK(residual(mathar(), t, n) == 0);

  std::vector<BigInt> bad = t.values();
  bad[4] = 5;  // a(6) := 5
  const SequenceTable corrupted(2, bad, Provenance::BFile);
  CHECK(residual(mathar(), corrupted, 6) == 1);

  CHECK_THROWS_AS(residual(mathar(), t, 4), DomainError);
  CHECK(evaluate_lhs(mathar(), t, 4) == 2);  // the relation does not hold at n = 4
  try {
    residual(mathar(), t, 13);
    FAIL("expected a range error");
  } catch (const RangeError& e) {
    CHECK(e.missing() == std::vector<std::int64_t>{12, 13});
  }
}

TEST_CASE("residual arithmetic is exact integer arithmetic", "[recurrence]") {
  static_assert(std::is_same_v<decltype(residual(mathar(), SequenceTable{}, 0)), BigInt>);
  static_assert(std::is_same_v<std::remove_cvref_t<decltype(SequenceTable{}.at(0))>, BigInt>);
  static_assert(std::is_same_v<decltype(ResidualReport{}.failures)::value_type::second_type, BigInt>);
}

TEST_CASE("sweeps", "[recurrence]") {
  const SequenceTable cf = a045406_closed_form().table(3, 400);
  const ResidualReport ok = sweep(mathar(), cf, 5, 400);
  CHECK(ok.ok());
  CHECK(ok.checked() == 396);

  const ResidualReport tw = sweep(twin(), a001711_closed_form().table(0, 300), 2, 300);
  CHECK(tw.ok());

  const ResidualReport empty = sweep(mathar(), cf, 10, 9);
  CHECK(empty.ok());
  CHECK(empty.checked() == 0);

  CHECK_THROWS_AS(sweep(mathar(), cf, 5, 401), RangeError);
  CHECK_THROWS_AS(sweep(mathar(), cf, 4, 10), DomainError);
}

TEST_CASE("sweep failure lists are deterministic across thread counts", "[recurrence]") {
  std::vector<BigInt> v = a045406_closed_form().table(3, 2000).values();
  for (std::int64_t n : {1900L, 17L, 640L, 1201L}) v[static_cast<std::size_t>(n - 3)] += 1;
  const SequenceTable t(3, v, Provenance::ClosedForm);
  const ResidualReport one = sweep(mathar(), t, 5, 2000, 1);
  const ResidualReport four = sweep(mathar(), t, 5, 2000, 4);
  REQUIRE(one.failures.size() == four.failures.size());
  for (std::size_t i = 0; i < one.failures.size(); ++i) CHECK(one.failures[i] == four.failures[i]);
  CHECK(std::is_sorted(four.failures.begin(), four.failures.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; }));
  CHECK(four.failures.front().first == 17);
  // each corruption shows at n, n+1, n+2 (p0 = 1, p1, p2 nonzero there)
  CHECK(four.failures.size() == 12);
}

TEST_CASE("unfold", "[recurrence]") {
  const SequenceTable seeds(3, {3, -1}, Provenance::ClosedForm);
  const SequenceTable grown = unfold(mathar(), seeds, 11);
  CHECK(grown.provenance() == Provenance::Recurrence);
  CHECK(grown.slice(5, 11) == printed_a045406().slice(5, 11));
  CHECK(unfold(mathar(), seeds, 4) == seeds);

  const SequenceTable twin_seeds = a001711_closed_form().table(0, 1);
  CHECK(unfold(twin(), twin_seeds, 200) == a001711_closed_form().table(0, 200));

  // p0 = n - 6 vanishes at n = 6
  const PRecurrence root({Polynomial::linear(Rational(-6)), -Polynomial::linear(Rational(-6))}, 1);
  CHECK_THROWS_AS(unfold(root, SequenceTable(0, {1}, Provenance::BFile), 10), DomainError);
  // 2 a(n) = a(n-1) leaves the integers
  const PRecurrence halving({Polynomial(2), Polynomial(-1)}, 1);
  CHECK_THROWS_AS(unfold(halving, SequenceTable(0, {1}, Provenance::BFile), 3), NonIntegerError);
}

TEST_CASE("Bareiss nullspace agrees with rational Gauss-Jordan", "[linalg][property]") {
  oracle::Gen gen(oracle::kSeed + 30);
  for (int i = 0; i < oracle::kPropertyCases; ++i) {
    const auto rows = static_cast<std::size_t>(gen.integer(1, 6));
    const auto cols = static_cast<std::size_t>(gen.integer(1, 7));
    IntMatrix m(rows, std::vector<BigInt>(cols));
    for (auto& r : m)
      for (auto& v : r) v = gen.integer(0, 2) ? gen.integer(-5, 5) : 0;
    // duplicate a row sometimes to force rank deficiency
    if (rows > 1 && gen.integer(0, 1)) m.back() = m.front();
    const auto basis = nullspace_bareiss(m, cols);
    const auto ref = oracle::nullspace_rref(m, cols);
    REQUIRE(basis.size() == ref.size());
    for (const auto& x : basis)
      for (const auto& r : m) {
        BigInt dot = 0;
        for (std::size_t j = 0; j < cols; ++j) dot += r[j] * x[j];
        REQUIRE(dot == 0);
      }
  }
}

TEST_CASE("guess recovers Mathar's recurrence", "[guess]") {
  const SequenceTable bfile = egf_coefficients(build_F(25), 2);  // n = 2..25
  const auto found = guess(bfile, 2, 2);
  REQUIRE(found.size() == 1);
  CHECK(found[0].same_operator(mathar()));
  CHECK(found[0].valid_from() == 5);

  const auto from_closed_form = guess(a045406_closed_form().table(3, 27), 2, 2);
  REQUIRE(from_closed_form.size() == 1);
  CHECK(from_closed_form[0] == mathar());

  // stability: more terms, same canonical recurrence
  const auto longer = guess(egf_coefficients(build_F(60), 2), 2, 2);
  REQUIRE(longer.size() == 1);
  CHECK(longer[0] == found[0]);

  // a larger degree bound still canonicalizes to the same recurrence
  const auto deg3 = guess(a045406_closed_form().table(3, 40), 2, 3);
  REQUIRE_FALSE(deg3.empty());
  CHECK(deg3[0].same_operator(mathar()));
}

TEST_CASE("guess recovers the A001711 recurrence", "[guess]") {
  const auto found = guess(a001711_closed_form().table(0, 25), 2, 2);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == twin());
}

TEST_CASE("no order-1 degree-1 recurrence fits A045406", "[guess]") {
  const SequenceTable terms = a045406_closed_form().table(3, 32);  // 30 terms
  CHECK(guess(terms, 1, 1).empty());
  // exhaustive check: the full 30-term system has a trivial nullspace
  IntMatrix m;
  for (std::int64_t n = 4; n <= 32; ++n)
    m.push_back({terms.at(n), terms.at(n) * n, terms.at(n - 1), terms.at(n - 1) * n});
  CHECK(oracle::nullspace_rref(m, 4).empty());
}

TEST_CASE("guess input validation", "[guess]") {
  const SequenceTable few = a045406_closed_form().table(3, 12);
  try {
    guess(few, 2, 2);
    FAIL("expected InsufficientTerms");
  } catch (const InsufficientTerms& e) {
    CHECK(e.minimum() == 16);
  }
  CHECK(guess_min_terms(2, 2) == 16);
  CHECK_THROWS_AS(guess(SequenceTable(0, std::vector<BigInt>(40, 0), Provenance::BFile), 2, 2), TrivialInput);
  CHECK_THROWS_AS(guess(few, 0, 2), DomainError);
}

TEST_CASE("guess then unfold reproduces the sequence", "[guess]") {
  for (const auto& c : builtin_cases()) {
    const HarmonicClosedForm f = c.closed_form();
    const SequenceTable terms = f.table(f.domain_min, f.domain_min + 29);
    const auto found = guess(terms, 2, 2);
    REQUIRE_FALSE(found.empty());
    const PRecurrence& rec = found[0];
    const SequenceTable seeds = terms.slice(rec.valid_from() - 2, rec.valid_from() - 1);
    INFO(c.sequence_id);
    CHECK(unfold(rec, seeds, terms.last()).slice(seeds.offset(), terms.last()) == terms.slice(seeds.offset(), terms.last()));
  }
}

TEST_CASE("A045406 sign structure", "[recurrence]") {
  const SequenceTable t = a045406_closed_form().table(3, 400);
  for (std::int64_t n = 5; n < 400; ++n) REQUIRE(t.at(n) * t.at(n + 1) <= 0);
  for (std::int64_t n = 7; n < 400; ++n) REQUIRE(abs(t.at(n + 1)) > abs(t.at(n)));
}

TEST_CASE("closed form, e.g.f. and b-file tables agree", "[recurrence]") {
  const SequenceTable cf = a045406_closed_form().table(3, 40);
  const SequenceTable egf = egf_coefficients(build_F(40), 2);
  const SequenceTable from_rec = unfold(mathar(), cf.slice(3, 4), 40);
  CHECK(egf.slice(3, 40) == cf);
  CHECK(from_rec == cf);
}
