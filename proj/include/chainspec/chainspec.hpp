#pragma once

// Umbrella header for the chainspec library: spectral extremal analysis of
// bipartite chain graphs (degree profiles, staircase patterns, eigenvalue
// bounds, and exhaustive desk-scale verification of the extremal claims).

#include "chainspec/chain_matrix.hpp"
#include "chainspec/cmatrix.hpp"
#include "chainspec/degree_sequence.hpp"
#include "chainspec/enumeration.hpp"
#include "chainspec/errors.hpp"
#include "chainspec/extremal_search.hpp"
#include "chainspec/ferrers.hpp"
#include "chainspec/parallel.hpp"
#include "chainspec/rational.hpp"
#include "chainspec/second_compound.hpp"
#include "chainspec/spectra.hpp"
#include "chainspec/symmetric_eigen.hpp"
