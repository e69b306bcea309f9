#pragma once

#include "liesc/error.hpp"
#include "liesc/exact_arith.hpp"
#include "liesc/linear.hpp"
#include "liesc/lie_algebra.hpp"
#include "liesc/constructions.hpp"
#include "liesc/maximal.hpp"
#include "liesc/report.hpp"
#include "liesc/frattinian.hpp"
#include "liesc/decomposition.hpp"
