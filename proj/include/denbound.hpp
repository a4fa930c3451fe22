#pragma once

#include "denbound/errors.hpp"
#include "denbound/polynomial.hpp"
#include "denbound/factor.hpp"
#include "denbound/rational_function.hpp"
#include "denbound/difference_ring.hpp"
#include "denbound/matrix.hpp"
#include "denbound/tropical.hpp"
#include "denbound/local_bound.hpp"
#include "denbound/cw_bound.hpp"
#include "denbound/engine.hpp"
#include "denbound/parser.hpp"
