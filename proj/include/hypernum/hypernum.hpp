#pragma once

#include "hypernum/cli.hpp"
#include "hypernum/error.hpp"
#include "hypernum/eval.hpp"
#include "hypernum/format.hpp"
#include "hypernum/functions.hpp"
#include "hypernum/hyperbolic.hpp"
#include "hypernum/parse.hpp"
#include "hypernum/rational.hpp"
#include "hypernum/scalar.hpp"
