#pragma once

#include "geohyper/arrangement.hpp"
#include "geohyper/detect.hpp"
#include "geohyper/error.hpp"
#include "geohyper/exact_geom.hpp"
#include "geohyper/hypergraph.hpp"
#include "geohyper/io.hpp"
#include "geohyper/rational.hpp"
#include "geohyper/scenarios.hpp"
#include "geohyper/search.hpp"
#include "geohyper/svg.hpp"
#include "geohyper/witness.hpp"
