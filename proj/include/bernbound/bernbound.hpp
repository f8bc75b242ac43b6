#pragma once

#include "bernbound/asymptotic.hpp"
#include "bernbound/big_rational.hpp"
#include "bernbound/bound_catalog.hpp"
#include "bernbound/enclosure.hpp"
#include "bernbound/errors.hpp"
#include "bernbound/exact_core.hpp"
#include "bernbound/pi_forms.hpp"
#include "bernbound/primes.hpp"
