#pragma once

#include "chi_analysis.hpp"
#include "contfrac.hpp"
#include "counting.hpp"
#include "enumeration.hpp"
#include "fibcore.hpp"
#include "natural.hpp"
#include "oracle.hpp"
#include "orbits.hpp"
#include "polynomial.hpp"
