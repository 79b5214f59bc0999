#pragma once

// Convenience header for the whole library.

#include "stationary/cesaro.hpp"
#include "stationary/direct_solver.hpp"
#include "stationary/elimination.hpp"
#include "stationary/errors.hpp"
#include "stationary/irreducibility.hpp"
#include "stationary/random.hpp"
#include "stationary/simulator.hpp"
#include "stationary/stochastic_matrix.hpp"
#include "stationary/testkit.hpp"
