#ifndef STOCHASTIK_STOCHASTIK_HPP
#define STOCHASTIK_STOCHASTIK_HPP

#include "stochastik/distributions.hpp"
#include "stochastik/entropy.hpp"
#include "stochastik/error.hpp"
#include "stochastik/export.hpp"
#include "stochastik/modmath.hpp"
#include "stochastik/prng/concepts.hpp"
#include "stochastik/prng/congruential.hpp"
#include "stochastik/prng/inversive.hpp"
#include "stochastik/prng/kiss.hpp"
#include "stochastik/prng/lagged_fibonacci.hpp"
#include "stochastik/prng/mt64.hpp"
#include "stochastik/prng/multiple_recursive.hpp"
#include "stochastik/prng/registry.hpp"
#include "stochastik/prng/seed.hpp"
#include "stochastik/prng/xorshift.hpp"
#include "stochastik/processes.hpp"
#include "stochastik/sde_demo.hpp"
#include "stochastik/stattests.hpp"

#endif // STOCHASTIK_STOCHASTIK_HPP
