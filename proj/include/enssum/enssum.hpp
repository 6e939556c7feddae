#pragma once

// Ensemble summing simulator: mixed-state registers, one-query oracle
// evaluation, ensemble-averaged readout with noise and thermal models, query
// complexity comparisons, and a Riemann-sum integration frontend.

#include "enssum/complexity.hpp"
#include "enssum/ensemble.hpp"
#include "enssum/errors.hpp"
#include "enssum/integrate.hpp"
#include "enssum/measurement.hpp"
#include "enssum/oracle.hpp"
#include "enssum/pipeline.hpp"
#include "enssum/registers.hpp"
#include "enssum/rng.hpp"
#include "enssum/table_io.hpp"
