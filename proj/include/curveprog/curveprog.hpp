#ifndef CURVEPROG_CURVEPROG_HPP
#define CURVEPROG_CURVEPROG_HPP

#include "curveprog/cli.hpp"
#include "curveprog/construct.hpp"
#include "curveprog/curve.hpp"
#include "curveprog/errors.hpp"
#include "curveprog/factorq.hpp"
#include "curveprog/intfactor.hpp"
#include "curveprog/json_io.hpp"
#include "curveprog/parse.hpp"
#include "curveprog/progression.hpp"
#include "curveprog/rational.hpp"
#include "curveprog/search.hpp"
#include "curveprog/smoothness.hpp"

#endif
