#pragma once

// Umbrella header for the sepmatch library: maximum bipartite matching under
// separation constraints on a path or a grid.

#include "sepmatch/approx.hpp"
#include "sepmatch/conflict.hpp"
#include "sepmatch/core.hpp"
#include "sepmatch/errors.hpp"
#include "sepmatch/exact.hpp"
#include "sepmatch/generate.hpp"
#include "sepmatch/geometry.hpp"
#include "sepmatch/io.hpp"
#include "sepmatch/rational.hpp"
#include "sepmatch/reductions.hpp"
#include "sepmatch/scheduling.hpp"
