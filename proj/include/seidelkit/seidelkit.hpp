#pragma once

#include "seidelkit/numeric.hpp"
#include "seidelkit/quadratic.hpp"
#include "seidelkit/matrix.hpp"
#include "seidelkit/poly.hpp"
#include "seidelkit/graph.hpp"
#include "seidelkit/seidel.hpp"
#include "seidelkit/lattice.hpp"
#include "seidelkit/maximality.hpp"
#include "seidelkit/suites.hpp"
