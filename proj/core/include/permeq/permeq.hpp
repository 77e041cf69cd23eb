#ifndef PERMEQ_PERMEQ_HPP
#define PERMEQ_PERMEQ_HPP

#include "permeq/errors.hpp"
#include "permeq/notation.hpp"
#include "permeq/numtheory.hpp"
#include "permeq/perm.hpp"
#include "permeq/ranges.hpp"
#include "permeq/reducer.hpp"
#include "permeq/report.hpp"
#include "permeq/serialize.hpp"
#include "permeq/solver.hpp"

#endif  // PERMEQ_PERMEQ_HPP
