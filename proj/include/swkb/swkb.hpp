#pragma once

#include "swkb/errors.hpp"
#include "swkb/gauss_legendre.hpp"
#include "swkb/oracle.hpp"
#include "swkb/problem.hpp"
#include "swkb/quadrature.hpp"
#include "swkb/quantizers.hpp"
#include "swkb/root_finding.hpp"
#include "swkb/spectrum_table.hpp"
#include "swkb/tridiagonal.hpp"
