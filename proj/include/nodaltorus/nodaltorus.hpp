#pragma once

// Umbrella header: exact spectra and nodal sequences of flat tori, and the
// symbolic machinery showing that nodal sequences tell the Conway-Sloane
// isospectral pair apart.

#include "conway_sloane.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "linear_form.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "param_tuple.hpp"
#include "rational.hpp"
#include "spectral.hpp"
#include "sym_matrix.hpp"
#include "theorem.hpp"
