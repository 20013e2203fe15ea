#pragma once

#include "phl/combinatorics.hpp"
#include "phl/edgelist.hpp"
#include "phl/errors.hpp"
#include "phl/exact.hpp"
#include "phl/expansion.hpp"
#include "phl/flow.hpp"
#include "phl/generators.hpp"
#include "phl/harness.hpp"
#include "phl/hyperpipe.hpp"
#include "phl/perturb.hpp"
#include "phl/rng.hpp"
#include "phl/structures.hpp"
#include "phl/tourney.hpp"
#include "phl/witness.hpp"
