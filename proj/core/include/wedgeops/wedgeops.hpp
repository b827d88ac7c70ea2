#ifndef WEDGEOPS_WEDGEOPS_HPP
#define WEDGEOPS_WEDGEOPS_HPP

#include "wedgeops/harness.hpp"
#include "wedgeops/multiindex.hpp"
#include "wedgeops/operators.hpp"
#include "wedgeops/random.hpp"
#include "wedgeops/serialization.hpp"
#include "wedgeops/tensor.hpp"
#include "wedgeops/trigpoly.hpp"
#include "wedgeops/wedge.hpp"

#endif
