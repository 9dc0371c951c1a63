#pragma once

#include "greenbound/analytic.hpp"
#include "greenbound/bounds.hpp"
#include "greenbound/dichotomy.hpp"
#include "greenbound/divided_diff.hpp"
#include "greenbound/ensemble.hpp"
#include "greenbound/error.hpp"
#include "greenbound/green.hpp"
#include "greenbound/jet.hpp"
#include "greenbound/linalg.hpp"
#include "greenbound/matrix_io.hpp"
#include "greenbound/newton.hpp"
