#pragma once

#include "betti.hpp"
#include "binomial.hpp"
#include "catalog.hpp"
#include "dynkin.hpp"
#include "fan.hpp"
#include "groebner.hpp"
#include "ints.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "lp.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "parallel.hpp"
#include "toric.hpp"
