#pragma once

// Umbrella header for the coverplan library.

#include "coverplan/benchmarks.hpp"
#include "coverplan/disk_chain.hpp"
#include "coverplan/estimation.hpp"
#include "coverplan/geometry.hpp"
#include "coverplan/io.hpp"
#include "coverplan/model.hpp"
#include "coverplan/planner.hpp"
#include "coverplan/polyline.hpp"
#include "coverplan/scenario_gen.hpp"
#include "coverplan/sweep.hpp"
#include "coverplan/tsp.hpp"
#include "coverplan/visit.hpp"
