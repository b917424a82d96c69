#pragma once

#include "graphflag/acceptance.hpp"
#include "graphflag/errors.hpp"
#include "graphflag/exactlin.hpp"
#include "graphflag/flagvec.hpp"
#include "graphflag/graph.hpp"
#include "graphflag/integer.hpp"
#include "graphflag/partition.hpp"
#include "graphflag/polytope.hpp"
#include "graphflag/shelling.hpp"
#include "graphflag/vectors.hpp"
#include "graphflag/word.hpp"
