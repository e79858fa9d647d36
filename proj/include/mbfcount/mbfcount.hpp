#pragma once

// Umbrella header for the mbfcount library.

#include "burnside.hpp"
#include "count.hpp"
#include "cross_check.hpp"
#include "errors.hpp"
#include "fixpoint.hpp"
#include "mbf.hpp"
#include "mbf_set.hpp"
#include "oracle.hpp"
#include "orbit_poset.hpp"
#include "parallel.hpp"
#include "permutation.hpp"
