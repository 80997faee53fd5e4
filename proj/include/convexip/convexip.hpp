// Umbrella header.
#pragma once

#include "convexip/axioms.hpp"
#include "convexip/body.hpp"
#include "convexip/body_metric.hpp"
#include "convexip/core.hpp"
#include "convexip/directions.hpp"
#include "convexip/diversity.hpp"
#include "convexip/geometry.hpp"
#include "convexip/hull.hpp"
#include "convexip/inner_product.hpp"
#include "convexip/json_io.hpp"
#include "convexip/newick.hpp"
#include "convexip/phylo.hpp"
#include "convexip/support_curve.hpp"
#include "convexip/svg.hpp"
