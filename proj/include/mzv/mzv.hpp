#pragma once

#include "mzv/composition.hpp"
#include "mzv/word_combo.hpp"
#include "mzv/stuffle.hpp"
#include "mzv/regularize.hpp"
#include "mzv/special_numbers.hpp"
#include "mzv/parity_reduction.hpp"
#include "mzv/numeric/precision.hpp"
#include "mzv/numeric/mzv_eval.hpp"
#include "mzv/numeric/hurwitz.hpp"
#include "mzv/numeric/multitangent.hpp"
#include "mzv/verify.hpp"
#include "mzv/io.hpp"
