#pragma once

// Weighted graded polynomial rings: arithmetic, Groebner bases, generic
// initial ideals, stability, Hilbert functions and series, lexsegment
// machinery, free resolutions and regularity, and polarization.

#include "wpoly/automorphism.hpp"
#include "wpoly/groebner.hpp"
#include "wpoly/hilbert.hpp"
#include "wpoly/ideal.hpp"
#include "wpoly/lex.hpp"
#include "wpoly/matrix.hpp"
#include "wpoly/module_engine.hpp"
#include "wpoly/monomial.hpp"
#include "wpoly/order.hpp"
#include "wpoly/parse.hpp"
#include "wpoly/polarization.hpp"
#include "wpoly/polynomial.hpp"
#include "wpoly/rational.hpp"
#include "wpoly/resolution.hpp"
#include "wpoly/ring.hpp"
#include "wpoly/stability.hpp"
