#pragma once

namespace lerchkit {

// Mathematical constants used throughout the library, 30 significant digits
// each (double rounding happens at compile time).  Values cross-checked in
// tests/test_constants.cpp against independent series evaluations.
struct ConstantsTable {
  // pi
  static constexpr double pi = 3.14159265358979323846264338328;
  // Euler-Mascheroni gamma
  static constexpr double euler_gamma = 0.577215664901532860606512090082;
  // First generalized Stieltjes constant gamma_1 = gamma_1(1)
  static constexpr double stieltjes_gamma1 = -0.0728158454836767248605863758749;
  // Catalan's constant K = sum (-1)^n / (2n+1)^2
  static constexpr double catalan = 0.915965594177219015054603514932;
  // Glaisher-Kinkelin constant A, log A = 1/12 - zeta'(-1)
  static constexpr double glaisher = 1.28242712910062263687534256887;
  // Apery's constant zeta(3)
  static constexpr double zeta3 = 1.20205690315959428539973816151;
  // log 2
  static constexpr double log2 = 0.693147180559945309417232121458;
  // log 3
  static constexpr double log3 = 1.09861228866810969139524523692;
  // sqrt(2 pi)
  static constexpr double sqrt_two_pi = 2.50662827463100050241576528481;
};

}  // namespace lerchkit
