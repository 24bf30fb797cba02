#pragma once

#include "divcalc/arith.hpp"
#include "divcalc/divexpr.hpp"
#include "divcalc/enumeration.hpp"
#include "divcalc/error.hpp"
#include "divcalc/fixtures.hpp"
#include "divcalc/gaussian.hpp"
#include "divcalc/io.hpp"
#include "divcalc/lattice.hpp"
#include "divcalc/surface.hpp"
