#pragma once

/**
 * @file cbi.hpp
 * @brief Umbrella header for the complementary Bannai-Ito library.
 */

#include "cbi/core/error.hpp"
#include "cbi/core/hypergeometric.hpp"
#include "cbi/core/polynomial.hpp"
#include "cbi/core/ratfunc.hpp"
#include "cbi/core/rational.hpp"
#include "cbi/family/bannai_ito.hpp"
#include "cbi/family/complementary.hpp"
#include "cbi/family/params.hpp"
#include "cbi/family/sampling.hpp"
#include "cbi/operators/dunkl.hpp"
#include "cbi/operators/eigen.hpp"
#include "cbi/operators/grid.hpp"
#include "cbi/operators/shift_reflect.hpp"
#include "cbi/spectral/orthogonality.hpp"
#include "cbi/spectral/truncation.hpp"
#include "cbi/algebra/matrix.hpp"
#include "cbi/algebra/realization.hpp"
#include "cbi/algebra/representations.hpp"
#include "cbi/limits/askey_wilson.hpp"
#include "cbi/limits/dual_hahn.hpp"
#include "cbi/limits/para_krawtchouk.hpp"
#include "cbi/limits/symmetric_hahn.hpp"
