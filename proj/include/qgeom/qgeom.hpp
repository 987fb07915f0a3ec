#pragma once

#include "combinatorics.hpp"
#include "error.hpp"
#include "gauss_rat.hpp"
#include "grassmann.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "scalar.hpp"
#include "segre_ideal.hpp"
#include "state.hpp"
