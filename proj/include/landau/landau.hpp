#pragma once

#include "landau/bound_chain.hpp"
#include "landau/constants.hpp"
#include "landau/csv.hpp"
#include "landau/errors.hpp"
#include "landau/factorization.hpp"
#include "landau/intervals.hpp"
#include "landau/oracle.hpp"
#include "landau/prime_cache.hpp"
#include "landau/primes.hpp"
#include "landau/rational.hpp"
#include "landau/structure.hpp"
#include "landau/table.hpp"
