#pragma once

// Umbrella header.

#include "detkern/basis.hpp"
#include "detkern/combinatorics.hpp"
#include "detkern/errors.hpp"
#include "detkern/fixtures.hpp"
#include "detkern/gram.hpp"
#include "detkern/interval.hpp"
#include "detkern/kernel.hpp"
#include "detkern/quadrature.hpp"
#include "detkern/rmt.hpp"
#include "detkern/serialize.hpp"
#include "detkern/theorems.hpp"
