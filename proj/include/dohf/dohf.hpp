#pragma once

#include "bitset.hpp"
#include "coloring.hpp"
#include "decomposition.hpp"
#include "dimacs.hpp"
#include "divisibility.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "oracles.hpp"
#include "recognition.hpp"
#include "stable_set.hpp"
