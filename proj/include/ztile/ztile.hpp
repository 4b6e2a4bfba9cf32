#pragma once

#include "ztile/numtheory.hpp"
#include "ztile/integer_set.hpp"
#include "ztile/polynomial.hpp"
#include "ztile/cyclotomic.hpp"
#include "ztile/spectra.hpp"
#include "ztile/tiling.hpp"
#include "ztile/parallel.hpp"
#include "ztile/search.hpp"
#include "ztile/threeprime.hpp"
#include "ztile/set_literal.hpp"
#include "ztile/report.hpp"
#include "ztile/commands.hpp"
