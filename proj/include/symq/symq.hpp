#pragma once

/*
 * Umbrella header: the full eta-theta quantum-product toolkit.
 */

#include "symq/ambient.hpp"
#include "symq/chern.hpp"
#include "symq/gw.hpp"
#include "symq/qseries.hpp"
#include "symq/quantum.hpp"
#include "symq/rational.hpp"
#include "symq/reduce.hpp"
#include "symq/render.hpp"
#include "symq/ring.hpp"
#include "symq/table.hpp"
#include "symq/verify.hpp"
