#pragma once

// Umbrella header: everything the library offers.

#include "peakset/bigint.hpp"
#include "peakset/enumerate.hpp"
#include "peakset/errors.hpp"
#include "peakset/families.hpp"
#include "peakset/formulas.hpp"
#include "peakset/graph.hpp"
#include "peakset/graphio.hpp"
#include "peakset/oracle.hpp"
#include "peakset/polynomial.hpp"
#include "peakset/vertex_set.hpp"
#include "peakset/verify.hpp"
