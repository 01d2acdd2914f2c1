#pragma once

#include "hultman/bpgraph.hpp"
#include "hultman/census.hpp"
#include "hultman/distances.hpp"
#include "hultman/exact.hpp"
#include "hultman/moments.hpp"
#include "hultman/numbers.hpp"
#include "hultman/perm.hpp"
#include "hultman/polynomial.hpp"
#include "hultman/table1.hpp"
