#ifndef TREEHEIGHT_TREEHEIGHT_HPP
#define TREEHEIGHT_TREEHEIGHT_HPP

// Exact generating-function engine for the total-height statistic on
// degree-restricted families of ordered rooted trees.

#include "treeheight/errors.hpp"
#include "treeheight/rational.hpp"
#include "treeheight/polynomial.hpp"
#include "treeheight/ratfunc.hpp"
#include "treeheight/family.hpp"
#include "treeheight/field.hpp"
#include "treeheight/series.hpp"
#include "treeheight/momentgf.hpp"
#include "treeheight/stats.hpp"
#include "treeheight/oracle.hpp"

#endif
