#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cohom1/linsolve.hpp"
#include "cohom1/matrix.hpp"
#include "cohom1/series.hpp"

using namespace cohom1;

TEST_CASE("rational parsing round-trips exactly") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-12/8") == Rational(-3, 2));
    CHECK(to_string(parse_rational("-12/8")) == "-3/2");
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
    CHECK(log10_abs(Rational(1, 1000)) == doctest::Approx(-3.0));
    // magnitudes far below double range
    Rational tiny(1);
    for (int i = 0; i < 60; ++i) tiny /= 10;
    CHECK(log10_abs(tiny) == doctest::Approx(-60.0));
}

TEST_CASE("affine scalars: arithmetic, substitution, overflow") {
    AffineScalar x = AffineScalar::unknown(0);
    AffineScalar y = AffineScalar::unknown(1);
    AffineScalar e = AffineScalar(Rational(2)) * x + y - AffineScalar(3);
    CHECK(e.coeff(0) == 2);
    CHECK(e.coeff(1) == 1);
    CHECK(e.constant() == -3);
    e.substitute(0, AffineScalar(Rational(1, 2)) * y + AffineScalar(5));
    CHECK(e.coeff(0) == 0);
    CHECK(e.coeff(1) == 2);
    CHECK(e.constant() == 7);
    CHECK_THROWS_AS(x * y, AffineOverflow);
    CHECK((x - x).is_zero());
    CHECK((AffineScalar(Rational(0)) * x).is_zero());
}

static TruncatedSeries sin_series(int n_terms) {
    // sum (-1)^m t^(2m+1) / (2m+1)!
    std::vector<AffineScalar> c;
    Rational fact = 1;
    for (int m = 0; m < n_terms; ++m) {
        if (m > 0) fact *= Rational(2 * m) * Rational(2 * m + 1);
        c.push_back(AffineScalar(Rational(m % 2 ? -1 : 1) / fact));
    }
    return TruncatedSeries::spaced(1, 2, c).truncated(2 * n_terms);
}

TEST_CASE("sin^2 expansion matches the frozen closed form") {
    TruncatedSeries s = sin_series(5);
    TruncatedSeries s2 = s * s;
    CHECK(s2.coeff(2).constant() == 1);
    CHECK(s2.coeff(4).constant() == Rational(-1, 3));
    CHECK(s2.coeff(6).constant() == Rational(2, 45));
    CHECK(s2.coeff(8).constant() == Rational(-1, 315));
    CHECK(s2.coeff(3).is_zero());
    CHECK(s2.is_even());
    CHECK(s.is_odd());
}

TEST_CASE("validity bookkeeping through add, mul, inverse") {
    TruncatedSeries a = TruncatedSeries::monomial(0, AffineScalar(1)) +
                        TruncatedSeries::monomial(3, AffineScalar(2));
    TruncatedSeries b = a.truncated(5);
    CHECK(a.exact());
    CHECK(b.hi() == 5);
    CHECK((a + b).hi() == 5);
    // product validity: min(ord(a) + hi(b), ord(b) + hi(a))
    TruncatedSeries c = TruncatedSeries::monomial(2, AffineScalar(1)).truncated(7);
    CHECK((b * c).hi() == 7);  // min(0+7, 2+5)
    CHECK_THROWS(b.coeff(6));
    CHECK(b.coeff(-4).is_zero());  // low side always known
    // inverse of t^2*(1 + t^2) as a Laurent series
    TruncatedSeries f = TruncatedSeries::monomial(2, AffineScalar(1)) +
                        TruncatedSeries::monomial(4, AffineScalar(1));
    TruncatedSeries g = f.inverse(6);
    CHECK(g.coeff(-2).constant() == 1);
    CHECK(g.coeff(0).constant() == -1);
    CHECK(g.coeff(2).constant() == 1);
    CHECK(g.coeff(4).constant() == -1);
    TruncatedSeries one = f * g;
    CHECK(one.coeff(0).constant() == 1);
    for (int e = 1; e <= one.hi(); ++e) CHECK(one.coeff(e).is_zero());
    // truncated input limits the inverse: hi - 2*ord
    TruncatedSeries ft = f.truncated(8);
    CHECK(ft.inverse(100).hi() == 4);
}

TEST_CASE("derivative and shift") {
    TruncatedSeries s = TruncatedSeries::monomial(2, AffineScalar(1)) +
                        TruncatedSeries::monomial(4, AffineScalar(Rational(1, 2)));
    TruncatedSeries d = s.derivative();
    CHECK(d.coeff(1).constant() == 2);
    CHECK(d.coeff(3).constant() == 2);
    CHECK(s.shifted(-2).coeff(0).constant() == 1);
    CHECK(s.truncated(9).derivative().hi() == 8);
}

TEST_CASE("series with affine coefficients substitute cleanly") {
    TruncatedSeries s = TruncatedSeries::monomial(2, AffineScalar::unknown(3)) +
                        TruncatedSeries(AffineScalar(1));
    // u3^2 would appear at t^4, so the exact product overflows ...
    CHECK_THROWS_AS(s * s, AffineOverflow);
    // ... while a product truncated below t^4 never forms it
    TruncatedSeries capped = s.truncated(3) * s.truncated(3);
    CHECK(capped.coeff(2).coeff(3) == 2);
    capped.substitute(3, AffineScalar(Rational(5)));
    CHECK(capped.coeff(2).constant() == 10);
}

TEST_CASE("polynomial evaluation ignores validity") {
    TruncatedSeries s = TruncatedSeries::monomial(-1, AffineScalar(1)) +
                        TruncatedSeries::monomial(2, AffineScalar(3));
    AffineScalar v = s.eval_poly(Rational(1, 2));
    CHECK(v.constant() == Rational(2) + Rational(3, 4));
}

TEST_CASE("random polynomial products match direct convolution") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(-6, 6);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<AffineScalar> ca(6), cb(6);
        for (auto& c : ca) c = AffineScalar(rat(num(rng), 1 + trial % 3));
        for (auto& c : cb) c = AffineScalar(Rational(num(rng)));
        TruncatedSeries a = TruncatedSeries::spaced(0, 1, ca);
        TruncatedSeries b = TruncatedSeries::spaced(0, 1, cb);
        TruncatedSeries p = a * b;
        for (int e = 0; e <= 10; ++e) {
            Rational want = 0;
            for (int i = 0; i <= e && i < 6; ++i)
                if (e - i < 6) want += ca[i].constant() * cb[e - i].constant();
            CHECK(p.coeff(e).constant() == want);
        }
        if (!ca[0].is_zero()) {
            TruncatedSeries inv = a.inverse(8);
            TruncatedSeries one = (a * inv).truncated(8);
            CHECK(one.coeff(0).constant() == 1);
            for (int e = 1; e <= 8; ++e) CHECK(one.coeff(e).is_zero());
        }
    }
}

TEST_CASE("linear solver: unique, underdetermined, inconsistent") {
    AffineScalar x = AffineScalar::unknown(0), y = AffineScalar::unknown(1);
    SUBCASE("unique") {
        auto out = solve_linear_batch({{x + y - AffineScalar(3), PivotPreference::HighestId},
                                       {x - y - AffineScalar(1), PivotPreference::HighestId}});
        CHECK(out.consistent());
        CHECK(out.free_ids.empty());
        CHECK(out.solved.at(0).constant() == 2);
        CHECK(out.solved.at(1).constant() == 1);
    }
    SUBCASE("free variable with pivot preference") {
        auto out = solve_linear_batch({{x + y - AffineScalar(3), PivotPreference::HighestId}});
        CHECK(out.free_ids == std::vector<int>{0});
        CHECK(out.solved.at(1).coeff(0) == -1);
        auto out2 = solve_linear_batch({{x + y - AffineScalar(3), PivotPreference::LowestId}});
        CHECK(out2.free_ids == std::vector<int>{1});
    }
    SUBCASE("inconsistent") {
        auto out = solve_linear_batch({{x + y, PivotPreference::HighestId},
                                       {x + y - AffineScalar(1), PivotPreference::HighestId}});
        CHECK(out.obstruction_rows == std::vector<int>{1});
    }
    SUBCASE("redundant") {
        auto out = solve_linear_batch({{x - AffineScalar(1), PivotPreference::HighestId},
                                       {AffineScalar(Rational(2)) * x - AffineScalar(2),
                                        PivotPreference::HighestId}});
        CHECK(out.redundant_rows == std::vector<int>{1});
    }
}

TEST_CASE("rational matrix inverse on random LU products") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> num(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + trial % 4;
        RationalMatrix L = RationalMatrix::identity(n), U = RationalMatrix::identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (j < i) {
                    L(i, j) = Rational(num(rng), 3);
                    L(i, j).canonicalize();
                }
                if (j > i) U(i, j) = Rational(num(rng));
            }
        RationalMatrix A = L * U;
        RationalMatrix P = A * inverse(A);
        CHECK(P == RationalMatrix::identity(n));
    }
    RationalMatrix sing(2, 2);
    sing(0, 0) = 1;
    sing(1, 0) = 2;
    CHECK_THROWS_AS(inverse(sing), NotInvertible);
}

TEST_CASE("series matrix inverse handles a shifted block") {
    // M = t^2 (C0 + t N) with C0 = [[2,1],[1,1]]
    SeriesMatrix M(2, 2);
    M(0, 0) = TruncatedSeries::monomial(2, AffineScalar(2)) +
              TruncatedSeries::monomial(3, AffineScalar(1));
    M(0, 1) = TruncatedSeries::monomial(2, AffineScalar(1));
    M(1, 0) = TruncatedSeries::monomial(2, AffineScalar(1));
    M(1, 1) = TruncatedSeries::monomial(2, AffineScalar(1)) +
              TruncatedSeries::monomial(5, AffineScalar(Rational(1, 3)));
    SeriesMatrix inv = inverse_shifted(M, 2, 4);
    SeriesMatrix prod = M * inv;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            TruncatedSeries want = i == j ? TruncatedSeries(1) : TruncatedSeries();
            TruncatedSeries diff = prod(i, j) - want;
            for (int e = -2; e <= diff.hi(); ++e) CHECK(diff.coeff(e).is_zero());
        }
    // leading block with unknowns is rejected
    SeriesMatrix bad = M;
    bad(0, 0) = TruncatedSeries::monomial(2, AffineScalar::unknown(0));
    CHECK_THROWS_AS(inverse_shifted(bad, 2, 4), NotInvertible);
}
