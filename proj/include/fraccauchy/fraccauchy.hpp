#pragma once

#include "fraccauchy/error.hpp"
#include "fraccauchy/gamma.hpp"
#include "fraccauchy/ml.hpp"
#include "fraccauchy/oddfrac.hpp"
#include "fraccauchy/quad.hpp"
#include "fraccauchy/exprepr.hpp"
#include "fraccauchy/cauchy.hpp"
