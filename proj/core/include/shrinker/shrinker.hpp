#pragma once

#include "shrinker/chart.hpp"
#include "shrinker/curvature.hpp"
#include "shrinker/invariants.hpp"
#include "shrinker/quadrature.hpp"
#include "shrinker/soliton.hpp"
#include "shrinker/topology.hpp"
#include "shrinker/two_forms.hpp"
#include "shrinker/types.hpp"
#include "shrinker/zoo.hpp"
