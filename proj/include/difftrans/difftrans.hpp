#pragma once

#include "difftrans/certify.hpp"
#include "difftrans/diff_system.hpp"
#include "difftrans/dispersion.hpp"
#include "difftrans/error.hpp"
#include "difftrans/exp_const.hpp"
#include "difftrans/exp_poly.hpp"
#include "difftrans/json_io.hpp"
#include "difftrans/parse.hpp"
#include "difftrans/polynomial.hpp"
#include "difftrans/ratfunc.hpp"
#include "difftrans/rational.hpp"
#include "difftrans/roots.hpp"
#include "difftrans/solve.hpp"
#include "difftrans/telescope.hpp"
#include "difftrans/verify.hpp"
