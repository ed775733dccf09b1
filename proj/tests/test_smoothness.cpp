#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cohom1/catalog.hpp"
#include "cohom1/smoothness.hpp"

using namespace cohom1;

namespace {

TruncatedSeries even_poly(std::vector<Rational> c) {
    std::vector<AffineScalar> a(c.begin(), c.end());
    return TruncatedSeries::spaced(0, 2, a);
}

std::vector<TruncatedSeries> unknown_phis(const FibrationData& d, UnknownTable& tab) {
    std::vector<TruncatedSeries> phi;
    for (const auto& f : d.smoothness->functions)
        phi.push_back(TruncatedSeries(AffineScalar::unknown(tab.add(f))));
    return phi;
}

void check_zero_through(const TruncatedSeries& s, int order) {
    int top = std::min(order, s.hi());
    REQUIRE(top >= 0);
    for (int e = -6; e <= top; ++e) CHECK(s.coeff(e).is_zero());
}

}  // namespace

TEST_CASE("flat cone ansatz with zero functions gives P = t^2") {
    FibrationData d = catalog_load("flatcone");
    SeriesMatrix P = build_P(d, {TruncatedSeries()});
    CHECK(P(0, 0).ord() == 2);
    CHECK(P(0, 0).coeff(2).constant() == 1);
    CHECK((P(0, 0) - TruncatedSeries::monomial(2, AffineScalar(Rational(1)))).known_zero());
}

TEST_CASE("four-dimensional orbit ansatz assembles the documented entries") {
    FibrationData d = catalog_load("example1");
    UnknownTable tab;
    SeriesMatrix P = build_P(d, unknown_phis(d, tab));
    // p entry: t^2 + t^4 phi1
    CHECK(P(0, 0).coeff(2).constant() == 1);
    CHECK(P(0, 0).coeff(4) == AffineScalar::unknown(0));
    // m diagonal: a_i + t^2 phi
    CHECK(P(1, 1).coeff(0).constant() == 1);
    CHECK(P(1, 1).coeff(2) == AffineScalar::unknown(1));
    CHECK(P(3, 3).coeff(0).constant() == 2);
    CHECK(P(3, 3).coeff(2) == AffineScalar::unknown(2));
    // m off-diagonal pairs, with the sign flip on the second channel
    CHECK(P(1, 3).coeff(2) == AffineScalar::unknown(3));
    CHECK(P(2, 4).coeff(2) == AffineScalar::unknown(3));
    CHECK(P(1, 4).coeff(2) == AffineScalar::unknown(4));
    CHECK(P(2, 3).coeff(2) == -AffineScalar::unknown(4));
    // symmetry
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK((P(i, j) - P(j, i)).known_zero());
}

TEST_CASE("expansion split of the four-dimensional orbit ansatz") {
    FibrationData d = catalog_load("example1");
    UnknownTable tab;
    SeriesMatrix P = build_P(d, unknown_phis(d, tab));
    MetricExpansion ex = extract_expansion(d, P);
    CHECK(ex.dim_p == 1);
    CHECK(ex.dim_m == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(ex.A0(i, i) == (i < 2 ? Rational(1) : Rational(2)));
        for (int j = 0; j < 4; ++j) {
            if (i != j) CHECK(ex.A0(i, j) == 0);
            CHECK(ex.A1(i, j) == 0);
        }
    }
    CHECK(ex.B(0, 0).coeff(0) == AffineScalar::unknown(0));
    CHECK(ex.A(0, 0).coeff(0) == AffineScalar::unknown(1));
    CHECK(ex.A(2, 2).coeff(0) == AffineScalar::unknown(2));
    CHECK(ex.A(0, 2).coeff(0) == AffineScalar::unknown(3));
    CHECK(ex.A(1, 2).coeff(0) == -AffineScalar::unknown(4));
    // round trip
    SeriesMatrix Q = assemble_P(d, ex);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK((P(i, j) - Q(i, j)).identically_zero());
}

TEST_CASE("odd coefficient functions are rejected") {
    FibrationData d = catalog_load("flatcone");
    TruncatedSeries odd = TruncatedSeries::monomial(1, AffineScalar(Rational(1)));
    CHECK_THROWS_AS(build_P(d, {odd}), ParityViolation);
}

TEST_CASE("wrong leading shape is rejected") {
    FibrationData d = catalog_load("flatcone");
    SeriesMatrix P(1, 1);
    P(0, 0) = TruncatedSeries::monomial(3, AffineScalar(Rational(1)));
    CHECK_THROWS_AS(extract_expansion(d, P), ExpansionMismatch);
    FibrationData e1 = catalog_load("example1");
    SeriesMatrix Q = build_P(e1, std::vector<TruncatedSeries>(5));
    Q(0, 0) += TruncatedSeries::monomial(3, AffineScalar(Rational(1)));
    CHECK_THROWS_AS(extract_expansion(e1, Q), ExpansionMismatch);
}

TEST_CASE("block inverse reproduces the leading-term formulas") {
    FibrationData d = catalog_load("example1");  // only the dims are used
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-2, 2);
    MetricExpansion ex;
    ex.dim_p = 1;
    ex.dim_m = 4;
    RationalMatrix G(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G(i, j) = Rational(num(rng));
    ex.A0 = G.transposed() * G;
    for (int i = 0; i < 4; ++i) ex.A0(i, i) += Rational(3);
    ex.A1 = RationalMatrix(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) ex.A1(i, j) = ex.A1(j, i) = Rational(num(rng));
    ex.C0 = RationalMatrix(4, 1);
    for (int i = 0; i < 4; ++i) ex.C0(i, 0) = Rational(num(rng));
    ex.A = SeriesMatrix(4, 4);
    ex.B = SeriesMatrix(1, 1);
    ex.C = SeriesMatrix(4, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            ex.A(i, j) = ex.A(j, i) = even_poly({Rational(num(rng)), Rational(num(rng))});
    ex.B(0, 0) = even_poly({Rational(num(rng)), Rational(num(rng))});
    for (int i = 0; i < 4; ++i) ex.C(i, 0) = even_poly({Rational(num(rng))});

    SeriesMatrix P = assemble_P(d, ex);
    int N = 8;
    SeriesMatrix Pinv = metric_inverse(d, P, N);
    SeriesMatrix I5 = SeriesMatrix::identity(5);
    SeriesMatrix D = truncated(P * Pinv, N - 2) - I5;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) check_zero_through(D(i, j), N - 4);

    RationalMatrix A0inv = inverse(ex.A0);
    RationalMatrix M1 = -(A0inv * ex.A1 * A0inv);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(Pinv(1 + i, 1 + j).coeff(0).constant() == A0inv(i, j));
            CHECK(Pinv(1 + i, 1 + j).coeff(1).constant() == M1(i, j));
        }
    // p block: t^-2 - (B(0) - C0^T A0^-1 C0) + O(t)
    RationalMatrix schur0 = ex.C0.transposed() * A0inv * ex.C0;
    CHECK(Pinv(0, 0).coeff(-2).constant() == 1);
    CHECK(Pinv(0, 0).coeff(-1).is_zero());
    CHECK(Pinv(0, 0).coeff(0).constant() == -(ex.B(0, 0).coeff(0).constant() - schur0(0, 0)));
}

TEST_CASE("every shipped ansatz passes validation") {
    for (const auto& name : catalog_names()) {
        FibrationData d = catalog_load(name);
        if (!d.smoothness) continue;
        CAPTURE(name);
        UnknownTable tab;
        AnsatzReport rep = validate_ansatz(d, tab);
        for (const auto& p : rep.problems) CAPTURE(p);
        CHECK(rep.ok());
        CHECK(tab.size() == static_cast<int>(d.smoothness->functions.size()));
    }
}

TEST_CASE("missing smoothness data is reported cleanly") {
    FibrationData d = catalog_load("berger");
    CHECK_THROWS_AS(build_P(d, {}), InvalidInput);
}
