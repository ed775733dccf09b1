#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cohom1/catalog.hpp"
#include "cohom1/ivp.hpp"

using namespace cohom1;

namespace {

// Taylor coefficients of sin^2(t): coefficient of t^(2k) is
// (-1)^(k+1) 2^(2k-1) / (2k)!.
Rational sin2_coeff(int k) {
    Rational num = 1;
    for (int i = 0; i < 2 * k - 1; ++i) num *= 2;
    Rational den = 1;
    for (int i = 2; i <= 2 * k; ++i) den *= i;
    Rational v = num / den;
    return k % 2 == 0 ? -v : v;
}

// Exact polynomial truncation (keeps validity exact, drops high terms).
TruncatedSeries chop(const TruncatedSeries& s, int deg) {
    TruncatedSeries r;
    for (int e = std::min(s.ord(), 0); e <= std::min(s.max_deg(), deg); ++e)
        r.set_coeff(e, s.coeff(e));
    return r;
}

}  // namespace

TEST_CASE("round 3-sphere series reproduces sin^2 t through order 12") {
    IVPProblem p;
    p.data = catalog_load("sphere3");
    p.target = CompatTarget::einstein(Rational(2));
    p.order = 12;
    IVPSolution sol = solve_series(p);
    REQUIRE(sol.phi.size() == 1);
    CHECK(sol.warnings.empty());
    // metric entry t^2 + t^4 phi(t) = sin^2 t, so phi coeff at t^(2j) is
    // the sin^2 coefficient at t^(2j+4)
    for (int j = 0; 2 * j <= 12; ++j) CHECK(sol.phi[0].coeff(2 * j).constant() == sin2_coeff(j + 2));
    CHECK(sol.phi[0].coeff(0).constant() == rat(-1, 3));
    CHECK(sol.phi[0].coeff(2).constant() == rat(2, 45));
    CHECK(sol.phi[0].coeff(4).constant() == rat(-1, 315));
    // provenance: order 0 from the compatibility system, the rest solved
    CHECK(sol.table.front().provenance == "compatibility");
    CHECK(sol.table.back().provenance == "solved (order 12)");

    CertificateReport cert = residual_certificate(sol);
    CHECK(cert.passed);
    CHECK(cert.threshold == doctest::Approx(12.8));
    for (const auto& row : cert.rows) {
        CAPTURE(row.label);
        CHECK((row.skipped || row.slope >= 12.8));
    }
    REQUIRE(cert.normal_exact_through.has_value());
    CHECK(*cert.normal_exact_through >= 12 - 4);
}

TEST_CASE("flat target on the cone solves to the flat cone") {
    IVPProblem p;
    p.data = catalog_load("flatcone");
    p.target = CompatTarget::tensor(SeriesMatrix(1, 1));
    p.order = 16;
    IVPSolution sol = solve_series(p);
    CHECK(sol.phi[0].identically_zero());
    CertificateReport cert = residual_certificate(sol);
    CHECK(cert.passed);
    for (const auto& row : cert.rows) CHECK(row.skipped);
}

TEST_CASE("Gaussian soliton: flat metric, potential exactly lambda/2") {
    IVPProblem p;
    p.data = catalog_load("flatcone");
    p.target = CompatTarget::soliton(Rational(4), Rational(0));
    p.order = 10;
    IVPSolution sol = solve_soliton(p);
    CHECK(sol.phi[0].identically_zero());
    REQUIRE(sol.potential.has_value());
    CHECK(sol.potential->coeff(0).constant() == Rational(2));
    TruncatedSeries rest = *sol.potential - TruncatedSeries(Rational(2));
    CHECK(rest.identically_zero());
    CHECK(residual_certificate(sol).passed);
}

TEST_CASE("cigar soliton coefficients match tanh closed forms") {
    // steady soliton on the plane: metric dt^2 + tanh^2 t dtheta^2 with
    // u = -2 log cosh t, stored as psi = u / t^2
    IVPProblem p;
    p.data = catalog_load("flatcone");
    p.target = CompatTarget::soliton(Rational(0), Rational(0));
    p.free_values["phi(0)"] = rat(-2, 3);
    p.order = 8;
    IVPSolution sol = solve_soliton(p);
    CHECK(sol.phi[0].coeff(0).constant() == rat(-2, 3));
    CHECK(sol.phi[0].coeff(2).constant() == rat(17, 45));
    REQUIRE(sol.potential.has_value());
    CHECK(sol.potential->coeff(0).constant() == Rational(-1));
    CHECK(sol.potential->coeff(2).constant() == rat(1, 6));
    CHECK(sol.potential->coeff(4).constant() == rat(-2, 45));
    CHECK(residual_certificate(sol).passed);
}

TEST_CASE("soliton with vanishing potential reduces to the Einstein solve") {
    IVPProblem e;
    e.data = catalog_load("sphere3");
    e.target = CompatTarget::einstein(Rational(2));
    e.order = 10;
    IVPSolution einstein = solve_series(e);

    IVPProblem s = e;
    s.target = CompatTarget::soliton(Rational(2), Rational(0));
    // the soliton order-0 system leaves the metric value free; choosing
    // the Einstein one forces the potential to vanish
    s.free_values["phi(0)"] = rat(-1, 3);
    IVPSolution soliton = solve_soliton(s);
    REQUIRE(soliton.potential.has_value());
    CHECK(soliton.potential->identically_zero());
    CHECK((soliton.phi[0] - einstein.phi[0]).identically_zero());
}

TEST_CASE("soliton target on the quaternionic example certifies") {
    IVPProblem p;
    p.data = catalog_load("example3");
    p.target = CompatTarget::soliton(Rational(6), Rational(0));
    p.order = 6;
    IVPSolution sol = solve_soliton(p);
    CHECK(residual_certificate(sol).passed);
}

TEST_CASE("quaternionic example: off-diagonal initial values stay free") {
    // six of the seven order-0 metric values are genuinely free: a
    // solution with a nonzero off-diagonal seed still certifies
    IVPProblem p;
    p.data = catalog_load("example3");
    p.target = CompatTarget::einstein(Rational(6));
    p.order = 8;
    p.free_values["phi12(0)"] = rat(1, 5);
    p.free_values["phi11(0)"] = rat(-1, 3);
    IVPSolution sol = solve_series(p);
    CHECK(sol.warnings.empty());
    int i12 = 1;  // function order: phi11, phi12, phi13, phi22, phi23, phi33, psi
    CHECK(sol.phi[i12].coeff(0).constant() == rat(1, 5));
    CHECK(residual_certificate(sol).passed);
}

TEST_CASE("a target breaking the module invariance obstructs at order 0") {
    FibrationData d = catalog_load("example1");
    int n = d.dim_n();
    SeriesMatrix T(n, n);
    // a constant entry across the equivalence channel that no invariant
    // metric curvature can produce
    T(d.pos_in_n[2], d.pos_in_n[4]) = TruncatedSeries(Rational(1));
    T(d.pos_in_n[4], d.pos_in_n[2]) = TruncatedSeries(Rational(1));
    IVPProblem p;
    p.data = d;
    p.target = CompatTarget::tensor(T);
    p.order = 4;
    CHECK_THROWS_AS(solve_series(p), ObstructionAtOrder);
    try {
        solve_series(p);
    } catch (const ObstructionAtOrder& e) {
        CHECK(e.order == 0);
    }
}

TEST_CASE("free parameters: assignment is honored and locality holds") {
    IVPProblem p;
    p.data = catalog_load("example1");
    p.target = CompatTarget::einstein(Rational(2));
    p.order = 6;
    IVPSolution a = solve_series(p);
    p.free_values["phi4(0)"] = rat(1, 7);
    IVPSolution b = solve_series(p);
    int i4 = 3;  // phi4 index in the function list
    CHECK(a.phi[i4].coeff(0).constant() == 0);
    CHECK(b.phi[i4].coeff(0).constant() == rat(1, 7));
    CHECK(residual_certificate(a).passed);
    CHECK(residual_certificate(b).passed);
    // assigning a determined value is rejected
    IVPProblem bad = p;
    bad.free_values.clear();
    bad.free_values["phi1(0)"] = 1;
    CHECK_THROWS_AS(solve_series(bad), InvalidInput);
    bad.free_values.clear();
    bad.free_values["nosuch"] = 1;
    CHECK_THROWS_AS(solve_series(bad), InvalidInput);
}

TEST_CASE("determinism: identical inputs give identical coefficient tables") {
    IVPProblem p;
    p.data = catalog_load("example2");
    p.target = CompatTarget::einstein(Rational(1));
    p.order = 8;
    IVPSolution a = solve_series(p);
    IVPSolution b = solve_series(p);
    REQUIRE(a.table.size() == b.table.size());
    for (size_t i = 0; i < a.table.size(); ++i) {
        CHECK(a.table[i].name == b.table[i].name);
        CHECK(a.table[i].power == b.table[i].power);
        CHECK(a.table[i].value == b.table[i].value);
        CHECK(a.table[i].provenance == b.table[i].provenance);
    }
    CHECK(residual_certificate(a).passed);
}

TEST_CASE("reparametrized gauge: flat data keep a constant lapse") {
    IVPProblem p;
    p.data = catalog_load("flatcone");
    p.target = CompatTarget::tensor(SeriesMatrix(1, 1));
    p.order = 10;
    p.h0 = rat(5, 2);
    IVPSolution sol = solve_reparametrized(p, TruncatedSeries());
    CHECK(sol.phi[0].identically_zero());
    REQUIRE(sol.lapse.has_value());
    CHECK(sol.lapse->identically_zero());
    CHECK(residual_certificate(sol).passed);
}

TEST_CASE("reparametrized gauge with h0 = 1 reproduces the arc-length series") {
    IVPProblem p;
    p.data = catalog_load("sphere3");
    p.target = CompatTarget::einstein(Rational(2));
    p.order = 12;
    IVPSolution arc = solve_series(p);
    p.h0 = 1;
    IVPSolution rep = solve_reparametrized(p, TruncatedSeries(Rational(2)));
    REQUIRE(rep.lapse.has_value());
    CHECK(rep.lapse->identically_zero());
    CHECK((rep.phi[0] - arc.phi[0]).identically_zero());
    CHECK(residual_certificate(rep).passed);
}

TEST_CASE("reparametrized gauge rejects bad inputs") {
    IVPProblem p;
    p.data = catalog_load("flatcone");
    p.target = CompatTarget::tensor(SeriesMatrix(1, 1));
    p.h0 = 0;
    CHECK_THROWS_AS(solve_reparametrized(p, TruncatedSeries()), InvalidLapse);
    p.h0 = 1;
    CHECK_THROWS_AS(solve_reparametrized(p, TruncatedSeries::monomial(1, AffineScalar(Rational(1)))),
                    InvalidInput);
    p.target = CompatTarget::soliton(Rational(1), Rational(0));
    CHECK_THROWS_AS(solve_reparametrized(p, TruncatedSeries()), InvalidInput);
}

TEST_CASE("certificate at low order still certifies, tampering fails") {
    IVPProblem p;
    p.data = catalog_load("sphere3");
    p.target = CompatTarget::einstein(Rational(2));
    p.order = 4;
    IVPSolution low = solve_series(p);
    CertificateReport cert = residual_certificate(low);
    CHECK(cert.passed);
    for (const auto& row : cert.rows)
        if (!row.skipped) CHECK(row.slope >= 4.8);

    p.order = 12;
    IVPSolution full = solve_series(p);
    IVPSolution tampered = full;
    tampered.phi[0] = chop(tampered.phi[0], 4);  // claims order 12, carries order 4
    CertificateReport bad = residual_certificate(tampered, /*throw_on_failure=*/false);
    CHECK(!bad.passed);
    CHECK_THROWS_AS(residual_certificate(tampered), CertificationFailed);
}

TEST_CASE("solve_soliton insists on a soliton target") {
    IVPProblem p;
    p.data = catalog_load("flatcone");
    p.target = CompatTarget::einstein(Rational(0));
    CHECK_THROWS_AS(solve_soliton(p), InvalidInput);
}
