#pragma once

#include "robinc/discrepancy.hpp"
#include "robinc/discrete_energy.hpp"
#include "robinc/error.hpp"
#include "robinc/integer_poly.hpp"
#include "robinc/point_generation.hpp"
#include "robinc/serialization.hpp"
#include "robinc/set_catalog.hpp"
#include "robinc/test_function.hpp"
