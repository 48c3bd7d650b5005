#pragma once

// Exact arithmetic and cross-verification for relatively quadratic units
// over the Gaussian and Eisenstein fields: Newton iteration, ascending
// (Sierpinski) series, and Hurwitz continued fractions, with certified
// ball numerics for every rounding and inequality.

#include "quadcf/ball.hpp"
#include "quadcf/bivar.hpp"
#include "quadcf/cf.hpp"
#include "quadcf/convergents.hpp"
#include "quadcf/errors.hpp"
#include "quadcf/exclusion_scan.hpp"
#include "quadcf/field.hpp"
#include "quadcf/lattice.hpp"
#include "quadcf/newton.hpp"
#include "quadcf/numbers.hpp"
#include "quadcf/quadext.hpp"
#include "quadcf/roots.hpp"
#include "quadcf/serialize.hpp"
#include "quadcf/symbolic.hpp"
