#pragma once

// Umbrella header: the full lerchkit library.

#include "lerchkit/acceleration.hpp"
#include "lerchkit/complex_ops.hpp"
#include "lerchkit/constants.hpp"
#include "lerchkit/contour_derivative.hpp"
#include "lerchkit/errors.hpp"
#include "lerchkit/gamma.hpp"
#include "lerchkit/hurwitz_zeta.hpp"
#include "lerchkit/identities.hpp"
#include "lerchkit/lerch.hpp"
#include "lerchkit/options.hpp"
#include "lerchkit/polylog.hpp"
#include "lerchkit/quadrature.hpp"
#include "lerchkit/report_io.hpp"
#include "lerchkit/stieltjes.hpp"
#include "lerchkit/suite.hpp"
