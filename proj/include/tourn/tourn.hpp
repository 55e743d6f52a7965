#pragma once

#include "tourn/chordal.hpp"
#include "tourn/ehpair.hpp"
#include "tourn/gen.hpp"
#include "tourn/graph.hpp"
#include "tourn/oracle.hpp"
#include "tourn/outsimplicial.hpp"
#include "tourn/patterns.hpp"
#include "tourn/rational.hpp"
#include "tourn/rng.hpp"
#include "tourn/structures.hpp"
