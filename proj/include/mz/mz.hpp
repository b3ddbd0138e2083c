#pragma once

// Umbrella header: majorization extremal vectors over sum-constrained box
// sets and the derived second Zagreb index bounds.

#include "mz/errors.hpp"
#include "mz/extremal.hpp"
#include "mz/graph.hpp"
#include "mz/oracle.hpp"
#include "mz/ordered_vector.hpp"
#include "mz/sets.hpp"
#include "mz/zagreb.hpp"
