#pragma once

#include "binomial.hpp"
#include "error.hpp"
#include "factor_list.hpp"
#include "flop.hpp"
#include "json_io.hpp"
#include "mmalgebra.hpp"
#include "partial.hpp"
#include "qseries.hpp"
#include "strip.hpp"
