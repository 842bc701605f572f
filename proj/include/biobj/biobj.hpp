#pragma once

// Umbrella header.

#include "biobj/boba.hpp"
#include "biobj/dimacs.hpp"
#include "biobj/frontier.hpp"
#include "biobj/front.hpp"
#include "biobj/graph.hpp"
#include "biobj/heuristics.hpp"
#include "biobj/oracle.hpp"
#include "biobj/pathstore.hpp"
#include "biobj/search.hpp"
#include "biobj/solution_io.hpp"
#include "biobj/solver.hpp"
#include "biobj/types.hpp"
#include "biobj/unidirectional.hpp"
