#pragma once

#include "thinness/vertex_set.hpp"
#include "thinness/graph.hpp"
#include "thinness/layout.hpp"
#include "thinness/crown.hpp"
#include "thinness/grid.hpp"
#include "thinness/cograph.hpp"
#include "thinness/exact.hpp"
#include "thinness/coloring.hpp"
