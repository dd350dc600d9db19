#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "lerchkit/constants.hpp"
#include "lerchkit/hurwitz_zeta.hpp"
#include "lerchkit/lerch.hpp"

using namespace lerchkit;

namespace {

complex circle(double theta) { return std::polar(1.0, theta); }

}  // namespace

TEST_CASE("closed forms for nonpositive integer s") {
  // Phi(z, 0, v) = 1/(1-z), independent of v.
  complex z(0.4, 0.2), v(0.7, -0.3);
  auto r0 = phi(z, complex(0.0), v);
  CHECK(r0.strategy == LerchStrategy::ClosedFormNonPosIntS);
  CHECK(std::abs(r0.value - complex(1.0) / (complex(1.0) - z)) < 1e-14);

  // Phi(z, -1, v) = v/(1-z) + z/(1-z)^2.
  auto r1 = phi(z, complex(-1.0), v);
  complex expect = v / (complex(1.0) - z) + z / ((complex(1.0) - z) * (complex(1.0) - z));
  CHECK(std::abs(r1.value - expect) < 1e-13);

  // s = 0 on the unit circle still terminates (geometric anti-limit).
  auto rc = phi(circle(2.1), complex(0.0), complex(0.5));
  CHECK(std::abs(rc.value - complex(1.0) / (complex(1.0) - circle(2.1))) < 1e-13);
}

TEST_CASE("frozen reference values inside the disk") {
  // mpmath lerchphi, 25 significant digits.
  struct Case {
    complex z, s, v, expect;
    double tol;
  };
  const Case cases[] = {
      {complex(0.5), complex(2.3, 1.1), complex(1.7, -0.4),
       complex(0.2484922069464883496883224, -0.06169170370526173306872438), 5e-12},
      {complex(-0.98), complex(3.2), complex(0.4),
       complex(18.47864638902488843302317), 1e-11},
      {complex(0.0, 0.95), complex(0.5, 2.0), complex(2.0),
       complex(0.7437028226003043705525899, -0.5865397919276983574979969), 1e-12},
      {complex(0.3, -0.6), complex(-2.5, 0.5), complex(0.8, 0.3),
       complex(-0.8005855156649034595530161, 0.6665510838918482235454033), 1e-12},
      {complex(0.9), complex(1.5), complex(4.2),
       complex(0.4172151443029674656927408), 5e-12},
      {complex(-0.7, 0.6), complex(2.0), complex(0.3),
       complex(10.73737470712413332810636, 0.2435557436916591158595552), 1e-11},
  };
  for (const auto& c : cases) {
    auto r = phi(c.z, c.s, c.v);
    INFO("z=" << c.z << " s=" << c.s << " v=" << c.v
              << " strategy=" << to_string(r.strategy));
    CHECK(std::abs(r.value - c.expect) < c.tol * std::max(1.0, std::abs(c.expect)));
    CHECK(std::abs(r.value - c.expect) <= std::max(r.err_estimate * 20.0, 1e-14));
  }
}

TEST_CASE("frozen reference values on the unit circle") {
  // mpmath lerchphi at 40 dps, 20 digits kept.
  struct Case {
    complex z, s, v, expect;
    double tol;
  };
  const Case cases[] = {
      {circle(0.4), complex(0.8), complex(1.3),
       complex(1.1028248974465428375, 1.0435968352028267889), 1e-12},
      {circle(0.1), complex(1.1), complex(0.7),
       complex(2.9715331767372086457, 1.0951022332861384011), 1e-12},
      {circle(2.0 * ConstantsTable::pi / 14.0), complex(1.0, 0.25), complex(0.5),
       complex(2.6931101777111297721, 1.4129509238217808667), 1e-12},
      // Complex v with negative Re s goes through the residue-class reduction,
      // which loses a few digits to Euler-Maclaurin prefix cancellation.
      {circle(2.0 * ConstantsTable::pi * 9.0 / 14.0), complex(-2.1), complex(0.5, 0.2),
       complex(-0.14866962139319077487, 0.081432727854948386858), 5e-8},
      {complex(-1.0), complex(2.5), complex(0.3, 0.1),
       complex(11.917579282271349366, -12.723124696033130377), 1e-12},
      {circle(3.0), complex(0.5), complex(2.0),
       complex(0.39528085418204368318, 0.024151197425217012291), 1e-12},
      {circle(-0.399), complex(1.0, -0.25), complex(0.1),
       complex(9.4831624210440611466, -6.8029982573958110634), 1e-12},
      {circle(2.0 * ConstantsTable::pi / 3.0), complex(0.6), complex(1.5, -0.4),
       complex(0.43330412405075482217, 0.2923847701131234954), 1e-12},
  };
  for (const auto& c : cases) {
    auto r = phi(c.z, c.s, c.v);
    INFO("z=" << c.z << " s=" << c.s << " v=" << c.v
              << " strategy=" << to_string(r.strategy));
    CHECK(std::abs(r.value - c.expect) < c.tol * std::max(1.0, std::abs(c.expect)));
  }
}

TEST_CASE("split identity at z = -1 against the Hurwitz engine") {
  // Phi(-1, s, v) = 2^{-s} (zeta(s, v/2) - zeta(s, (v+1)/2)).  Evaluate the
  // left side with the plain accelerated series so the comparison does not
  // collapse to the q = 2 reduction comparing itself against itself.
  for (complex s : {complex(0.7, 0.0), complex(2.4, -1.3), complex(1.5, 0.8)}) {
    for (complex v : {complex(0.5, 0.0), complex(1.2, 0.4)}) {
      auto lhs = phi_with_strategy(complex(-1.0), s, v, LerchStrategy::AcceleratedSeries);
      complex rhs = pow_principal(complex(2.0), -s) *
                    (hurwitz_zeta(s, v / 2.0) - hurwitz_zeta(s, (v + complex(1.0)) / 2.0));
      CHECK(std::abs(lhs.value - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("Phi(-1, 1, 1/2) = pi/2") {
  auto r = phi(complex(-1.0), complex(1.0), complex(0.5));
  CHECK(std::abs(r.value - complex(0.5 * ConstantsTable::pi)) < 1e-12);
}

TEST_CASE("direct series and Hermite integral agree inside the disk") {
  const complex pts[][3] = {
      {complex(0.5, 0.3), complex(2.0, 0.5), complex(1.4)},
      {complex(-0.6, 0.2), complex(1.3), complex(0.8, 0.2)},
      {complex(0.85), complex(3.5, -1.0), complex(2.5, 0.5)},
  };
  for (const auto& p : pts) {
    auto a = phi_with_strategy(p[0], p[1], p[2], LerchStrategy::DirectSeries);
    auto b = phi_with_strategy(p[0], p[1], p[2], LerchStrategy::HermiteIntegral);
    CHECK(std::abs(a.value - b.value) < 1e-11 * std::max(1.0, std::abs(a.value)));
  }
}

TEST_CASE("v-shift recurrence Phi(z,s,v) = v^{-s} + z Phi(z,s,v+1)") {
  for (complex v : {complex(0.3, 0.0), complex(0.2, -0.8), complex(1.6, 0.5)}) {
    complex z(0.7, -0.1), s(1.8, 0.6);
    complex lhs = phi(z, s, v).value;
    complex rhs = pow_principal(v, -s) + z * phi(z, s, v + complex(1.0)).value;
    CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("small Re v triggers the shifted evaluation and stays accurate") {
  auto r = phi(complex(0.6), complex(2.0), complex(0.05));
  // Leading term dominates: 0.05^{-2} = 400.
  CHECK(r.value.real() > 400.0);
  complex tail = r.value - complex(std::pow(0.05, -2.0));
  complex check = phi(complex(0.6), complex(2.0), complex(1.05)).value * 0.6;
  CHECK(std::abs(tail - check) < 1e-10 * std::abs(check));
}

TEST_CASE("z = 1 reduces to Hurwitz zeta when Re s > 1") {
  auto r = phi(complex(1.0), complex(2.5), complex(1.2));
  CHECK(r.strategy == LerchStrategy::HurwitzEulerMaclaurin);
  CHECK(std::abs(r.value - hurwitz_zeta(complex(2.5), complex(1.2))) < 1e-13);
}

TEST_CASE("root-of-unity reduction agrees with the reflection formula") {
  // Both strategies apply for real v in (0,1] and Re s < 1/4 at low-order
  // roots of unity; they are derived independently.
  const double theta = 2.0 * ConstantsTable::pi / 5.0;
  for (complex s : {complex(-1.3, 0.0), complex(0.1, 0.7), complex(-3.5, 1.2)}) {
    auto red = phi_with_strategy(circle(theta), s, complex(0.6),
                                 LerchStrategy::HurwitzEulerMaclaurin);
    auto ref = phi_with_strategy(circle(theta), s, complex(0.6),
                                 LerchStrategy::CircleReflection);
    CHECK(std::abs(red.value - ref.value) <
          1e-9 * std::max(1.0, std::abs(ref.value)));
  }
}

TEST_CASE("s-derivative frozen values") {
  // mpmath diff(lerchphi, ...), 25 significant digits:
  //   d/ds Phi(-1, s, 1/2)   at s=-1 = 0.2915609040308187801383845  (= K/pi)
  //   d/ds Phi(.5, s, 1.25)  at s=2  = -0.2670496591713650207087646
  //   d2/ds2 Phi(.5, s,1.25) at s=2  = 0.1551949977307464340028644
  auto d1 = phi_sderiv(complex(-1.0), complex(-1.0), complex(0.5), 1);
  CHECK(std::abs(d1.value - complex(ConstantsTable::catalan / ConstantsTable::pi)) < 1e-11);

  auto d2 = phi_sderiv(complex(0.5), complex(2.0), complex(1.25), 1);
  CHECK(std::abs(d2.value - complex(-0.2670496591713650207087646)) < 1e-11);

  auto d3 = phi_sderiv(complex(0.5), complex(2.0), complex(1.25), 2);
  CHECK(std::abs(d3.value - complex(0.1551949977307464340028644)) < 1e-10);

  // Fully complex arguments:
  //   d/ds Phi(0.4+0.4i, s, 1.1+0.2i) at s = 0.5+0.5i
  auto d4 = phi_sderiv(complex(0.4, 0.4), complex(0.5, 0.5), complex(1.1, 0.2), 1);
  complex ref4(-0.4015041521144365464154741, -0.6505331951795850864633361);
  CHECK(std::abs(d4.value - ref4) < 1e-10);
}

TEST_CASE("s-derivative against central differences") {
  complex z(0.7, 0.2), s0(1.6, -0.4), v(1.3, 0.1);
  auto d = phi_sderiv(z, s0, v, 1);
  const double h = 1e-5;
  complex fd = (phi(z, s0 + complex(h), v).value - phi(z, s0 - complex(h), v).value) / (2.0 * h);
  CHECK(std::abs(d.value - fd) < 1e-8);
}

TEST_CASE("domain, pole, and divergence rejections") {
  CHECK_THROWS_AS(phi(complex(1.5), complex(2.0), complex(1.0)), domain_error);
  CHECK_THROWS_AS(phi(complex(0.5), complex(2.0), complex(0.0)), pole_error);
  CHECK_THROWS_AS(phi(complex(0.5), complex(2.0), complex(-3.0)), pole_error);
  CHECK_THROWS_AS(phi(complex(1.0), complex(0.5), complex(1.0)), divergence_error);
  CHECK_THROWS_AS(phi_sderiv(complex(0.5), complex(2.0), complex(1.0), 3), domain_error);
  CHECK_THROWS_AS(phi_sderiv(complex(1.0), complex(0.5), complex(1.0), 1), divergence_error);
}

TEST_CASE("phi_with_strategy rejects out-of-scope requests") {
  // Direct series needs |z| < 1.
  CHECK_THROWS_AS(phi_with_strategy(complex(-1.0), complex(0.5), complex(1.0),
                                    LerchStrategy::DirectSeries),
                  domain_error);
  // Closed form needs integer s in [-12, 0].
  CHECK_THROWS_AS(phi_with_strategy(complex(0.5), complex(0.5), complex(1.0),
                                    LerchStrategy::ClosedFormNonPosIntS),
                  domain_error);
  // Reflection needs |z| = 1 and real v.
  CHECK_THROWS_AS(phi_with_strategy(complex(0.5), complex(-1.0), complex(1.0),
                                    LerchStrategy::CircleReflection),
                  domain_error);
  // Hurwitz engine needs z^q = 1 for some q <= 64.
  CHECK_THROWS_AS(phi_with_strategy(circle(1.0), complex(2.0), complex(1.0),
                                    LerchStrategy::HurwitzEulerMaclaurin),
                  domain_error);
}

TEST_CASE("reported error estimates are honest at the frozen points") {
  auto r = phi(complex(0.9), complex(1.5), complex(4.2));
  CHECK(std::abs(r.value - complex(0.4172151443029674656927408)) <=
        std::max(r.err_estimate * 20.0, 1e-14));
  auto rc = phi(complex(-1.0), complex(2.5), complex(0.3, 0.1));
  complex refc(11.917579282271349366, -12.723124696033130377);
  CHECK(std::abs(rc.value - refc) <= std::max(rc.err_estimate * 20.0, 1e-13 * std::abs(refc)));
}
