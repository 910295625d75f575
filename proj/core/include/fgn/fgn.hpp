#pragma once

#include "fgn/analysis.hpp"
#include "fgn/bench.hpp"
#include "fgn/closed_form.hpp"
#include "fgn/covariance.hpp"
#include "fgn/error.hpp"
#include "fgn/hurst.hpp"
#include "fgn/montecarlo.hpp"
#include "fgn/recursion.hpp"
#include "fgn/report.hpp"
#include "fgn/toeplitz.hpp"
