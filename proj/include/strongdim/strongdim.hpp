#ifndef STRONGDIM_STRONGDIM_HPP
#define STRONGDIM_STRONGDIM_HPP

#include "strongdim/errors.hpp"
#include "strongdim/graph.hpp"
#include "strongdim/graph6.hpp"
#include "strongdim/generators.hpp"
#include "strongdim/metrics.hpp"
#include "strongdim/cover.hpp"
#include "strongdim/products.hpp"
#include "strongdim/formulas.hpp"
#include "strongdim/harness/oracle.hpp"
#include "strongdim/harness/isomorphism.hpp"
#include "strongdim/harness/enumerate.hpp"
#include "strongdim/harness/verify.hpp"
#include "strongdim/harness/conjecture.hpp"

#endif
