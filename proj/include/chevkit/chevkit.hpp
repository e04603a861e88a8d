#pragma once

// Umbrella header.

#include "chevkit/chevalley.hpp"
#include "chevkit/cohomology.hpp"
#include "chevkit/finitefield.hpp"
#include "chevkit/groupelems.hpp"
#include "chevkit/lattices.hpp"
#include "chevkit/paperchecks.hpp"
#include "chevkit/rootsystem.hpp"
#include "chevkit/zmatrix.hpp"
