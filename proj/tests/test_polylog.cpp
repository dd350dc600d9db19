#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "lerchkit/constants.hpp"
#include "lerchkit/lerch.hpp"
#include "lerchkit/polylog.hpp"

using namespace lerchkit;

TEST_CASE("polylog is z Phi(z, s, 1) by construction") {
  complex z(0.4, -0.3), s(1.7, 0.8);
  CHECK(std::abs(polylog(s, z) - z * phi(z, s, complex(1.0)).value) == 0.0);
}

TEST_CASE("elementary polylog values") {
  // Li_1(z) = -log(1 - z)
  CHECK(std::abs(polylog(complex(1.0), complex(0.5)) - complex(ConstantsTable::log2)) < 5e-12);
  complex z(0.3, 0.6);
  CHECK(std::abs(polylog(complex(1.0), z) + std::log(complex(1.0) - z)) < 1e-12);

  // Li_2(1) = pi^2/6
  CHECK(std::abs(polylog(complex(2.0), complex(1.0)) -
                 complex(ConstantsTable::pi * ConstantsTable::pi / 6.0)) < 1e-13);

  // Li_0(z) = z/(1-z)
  CHECK(std::abs(polylog(complex(0.0), complex(0.25)) - complex(1.0 / 3.0)) < 1e-14);

  // Li_s(0) = 0
  CHECK(std::abs(polylog(complex(2.3, -0.4), complex(0.0))) == 0.0);
}

TEST_CASE("polylog frozen reference values") {
  // mpmath, 25 significant digits:
  //   polylog(2, 0.3-0.4i)       = 0.2665968667427404341611758 - 0.461362891819108973189117i
  //   polylog(2.5, 0.7+0.2i)     = 0.7994832800555730262206145 + 0.2822606166251353828964087i
  complex li2 = polylog(complex(2.0), complex(0.3, -0.4));
  CHECK(std::abs(li2 - complex(0.2665968667427404341611758, -0.461362891819108973189117)) < 5e-12);
  complex li25 = polylog(complex(2.5), complex(0.7, 0.2));
  CHECK(std::abs(li25 - complex(0.7994832800555730262206145, 0.2822606166251353828964087)) < 5e-12);
}

TEST_CASE("duplication Li_s(z) + Li_s(-z) = 2^{1-s} Li_s(z^2)") {
  for (complex s : {complex(2.0, 0.0), complex(1.4, -0.6), complex(3.1, 1.1)}) {
    complex z(0.6, 0.25);
    complex lhs = polylog(s, z) + polylog(s, -z);
    complex rhs = pow_principal(complex(2.0), complex(1.0) - s) * polylog(s, z * z);
    CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("conjugate-pair s-derivatives at s = 0 sum to log(6 sqrt(3)/pi)") {
  // -e^{2 i pi/3} is the conjugate of e^{i pi/3}, so the two first
  // s-derivatives of Li at s = 0 sum to a real constant.
  complex z1 = expi(ConstantsTable::pi / 3.0);
  complex z2 = -expi(2.0 * ConstantsTable::pi / 3.0);
  complex d1 = polylog_sderiv(complex(0.0), z1, 1);
  complex d2 = polylog_sderiv(complex(0.0), z2, 1);
  double expect = std::log(6.0 * std::sqrt(3.0) / ConstantsTable::pi);
  CHECK(std::abs((d1 + d2) - complex(expect)) < 1e-10);
  CHECK(std::abs((d1 + d2).imag()) < 1e-10);
}

TEST_CASE("s-derivative against a finite difference at (1, 1/2)") {
  complex d = polylog_sderiv(complex(1.0), complex(0.5), 1);
  const double h = 1e-5;
  complex fd = (polylog(complex(1.0 + h), complex(0.5)) -
                polylog(complex(1.0 - h), complex(0.5))) /
               (2.0 * h);
  CHECK(std::abs(d - fd) < 1e-7);
}

TEST_CASE("s-derivative at z = 0 vanishes") {
  CHECK(std::abs(polylog_sderiv(complex(0.0), complex(0.0), 1)) == 0.0);
}

TEST_CASE("second s-derivative is consistent with first differences") {
  complex z(0.45, 0.15), s0(1.8, 0.0);
  complex d2 = polylog_sderiv(s0, z, 2);
  const double h = 1e-4;
  complex fd = (polylog_sderiv(s0 + complex(h), z, 1) -
                polylog_sderiv(s0 - complex(h), z, 1)) /
               (2.0 * h);
  CHECK(std::abs(d2 - fd) < 1e-6);
}
