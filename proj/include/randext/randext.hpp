#pragma once

#include "randext/closed_form.hpp"
#include "randext/compound_extremes.hpp"
#include "randext/count_distribution.hpp"
#include "randext/error.hpp"
#include "randext/estimation.hpp"
#include "randext/input_distribution.hpp"
#include "randext/numeric/optimize.hpp"
#include "randext/numeric/quadrature.hpp"
#include "randext/numeric/random_source.hpp"
#include "randext/numeric/series.hpp"
#include "randext/numeric/tolerance.hpp"
#include "randext/zeta.hpp"
