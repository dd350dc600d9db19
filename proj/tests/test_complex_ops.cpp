#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <limits>

#include "lerchkit/complex_ops.hpp"

using namespace lerchkit;

TEST_CASE("arg_principal lands in (-pi, pi]") {
  CHECK(arg_principal(complex(1.0, 0.0)) == 0.0);
  CHECK(arg_principal(complex(-1.0, 0.0)) == Catch::Approx(ConstantsTable::pi));
  CHECK(arg_principal(complex(0.0, -1.0)) == Catch::Approx(-0.5 * ConstantsTable::pi));
  // Just below the negative real axis the angle flips sign; at the axis the
  // exact -pi result is snapped to +pi.
  CHECK(arg_principal(complex(-1.0, -1e-9)) < 0.0);
  CHECK(arg_principal(complex(-1.0, -0.0)) == Catch::Approx(ConstantsTable::pi));
}

TEST_CASE("pow_principal matches elementary cases") {
  CHECK(std::abs(pow_principal(complex(2.0), complex(10.0)) - complex(1024.0)) < 1e-12);
  CHECK(std::abs(pow_principal(complex(-1.0), complex(0.5)) - complex(0.0, 1.0)) < 1e-15);
  // 1^w == 1 for any finite w on the principal branch.
  CHECK(std::abs(pow_principal(complex(1.0), complex(3.7, -2.2)) - complex(1.0)) < 1e-15);
  // z^-s * z^s == 1 away from the cut.
  complex z(0.3, 0.8), s(1.7, -0.4);
  CHECK(std::abs(pow_principal(z, s) * pow_principal(z, -s) - complex(1.0)) < 1e-14);
}

TEST_CASE("pow_principal of zero") {
  CHECK(pow_principal(complex(0.0), complex(2.0)) == complex(0.0));
}

TEST_CASE("expi and minus_one_pow sit on the unit circle") {
  for (double t : {0.0, 0.3, 1.7, -2.9}) {
    CHECK(std::abs(std::abs(expi(t)) - 1.0) < 1e-15);
  }
  CHECK(std::abs(minus_one_pow(1.0) - complex(-1.0)) < 1e-15);
  CHECK(std::abs(minus_one_pow(0.5) - complex(0.0, 1.0)) < 1e-15);
  // (-1)^(1/3) on the principal branch is e^{i pi/3}, not the real root.
  CHECK(std::abs(minus_one_pow(1.0 / 3.0) - complex(0.5, std::sqrt(3.0) / 2.0)) < 1e-15);
}

TEST_CASE("is_finite rejects NaN and infinity parts") {
  CHECK(is_finite(complex(1.0, -2.0)));
  CHECK_FALSE(is_finite(complex(std::numeric_limits<double>::quiet_NaN(), 0.0)));
  CHECK_FALSE(is_finite(complex(0.0, std::numeric_limits<double>::infinity())));
}

TEST_CASE("near_int and near_nonpos_int honor the domain tolerance") {
  long long k = 0;
  CHECK(near_int(complex(3.0, 0.0), k));
  CHECK(k == 3);
  CHECK(near_int(complex(-2.0 + 1e-14, 0.0), k));
  CHECK(k == -2);
  CHECK_FALSE(near_int(complex(2.5, 0.0), k));
  CHECK_FALSE(near_int(complex(2.0, 0.5), k));

  CHECK(near_nonpos_int(complex(0.0)));
  CHECK(near_nonpos_int(complex(-5.0, 1e-14)));
  CHECK_FALSE(near_nonpos_int(complex(1.0)));
  CHECK_FALSE(near_nonpos_int(complex(-5.5)));
}

TEST_CASE("log_principal inverts exp on the principal strip") {
  complex w(0.4, 2.2);
  CHECK(std::abs(log_principal(std::exp(w)) - w) < 1e-14);
}
