#ifndef SKEWDET_SKEWDET_HPP
#define SKEWDET_SKEWDET_HPP

#include "skewdet/code.hpp"
#include "skewdet/counting.hpp"
#include "skewdet/field.hpp"
#include "skewdet/oracle.hpp"
#include "skewdet/skew_matrix.hpp"
#include "skewdet/weights.hpp"

#endif
