#pragma once

// Umbrella header.

#include "geocvx/convexity.hpp"
#include "geocvx/error.hpp"
#include "geocvx/figure.hpp"
#include "geocvx/geometry.hpp"
#include "geocvx/hyperbolic.hpp"
#include "geocvx/io.hpp"
#include "geocvx/lemmas.hpp"
#include "geocvx/models.hpp"
#include "geocvx/numerics.hpp"
#include "geocvx/spherical.hpp"
#include "geocvx/svg.hpp"
#include "geocvx/verify.hpp"
