#pragma once

#include "mstinf/certify.hpp"
#include "mstinf/countable_space.hpp"
#include "mstinf/derived_metrics.hpp"
#include "mstinf/exactify.hpp"
#include "mstinf/fixtures.hpp"
#include "mstinf/json_io.hpp"
#include "mstinf/kruskal.hpp"
#include "mstinf/metric_space.hpp"
#include "mstinf/rational.hpp"
#include "mstinf/tree.hpp"
#include "mstinf/weighted_tree.hpp"
