#pragma once

// Binary storage codes on graphs with parity repair: GF(2) linear algebra,
// graph constructions, exact rate and capacity bounds, rank certificates,
// and a single-failure repair simulator.

#include "graphcode/bitmat.hpp"
#include "graphcode/bitvec.hpp"
#include "graphcode/bounds.hpp"
#include "graphcode/constructions.hpp"
#include "graphcode/errors.hpp"
#include "graphcode/graph.hpp"
#include "graphcode/rational.hpp"
#include "graphcode/repair_sim.hpp"
#include "graphcode/storage_code.hpp"
