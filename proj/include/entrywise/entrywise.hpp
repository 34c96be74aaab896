#ifndef ENTRYWISE_ENTRYWISE_HPP
#define ENTRYWISE_ENTRYWISE_HPP

// Umbrella header for the entrywise positivity-preserver calculus library.

#include "entrywise/domination.hpp"
#include "entrywise/exponents.hpp"
#include "entrywise/fuzz.hpp"
#include "entrywise/hermitian.hpp"
#include "entrywise/linalg.hpp"
#include "entrywise/matrix_io.hpp"
#include "entrywise/monotonicity.hpp"
#include "entrywise/partition.hpp"
#include "entrywise/preserver.hpp"
#include "entrywise/preserver_spec.hpp"
#include "entrywise/rational.hpp"
#include "entrywise/rayleigh.hpp"
#include "entrywise/rng.hpp"
#include "entrywise/sampling.hpp"
#include "entrywise/schur.hpp"
#include "entrywise/strata.hpp"
#include "entrywise/tableaux.hpp"
#include "entrywise/tolerances.hpp"

#endif // ENTRYWISE_ENTRYWISE_HPP
