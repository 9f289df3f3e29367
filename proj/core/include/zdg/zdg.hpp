#pragma once

// Umbrella header for the zdg library.

#include "zdg/adjacency.hpp"
#include "zdg/analysis.hpp"
#include "zdg/class_structure.hpp"
#include "zdg/distances.hpp"
#include "zdg/errors.hpp"
#include "zdg/factorization.hpp"
#include "zdg/jacobi.hpp"
#include "zdg/spectrum.hpp"
#include "zdg/sweep.hpp"
