#pragma once

#include "ohmgraph/arrangement.hpp"
#include "ohmgraph/circular_minors.hpp"
#include "ohmgraph/config.hpp"
#include "ohmgraph/dual.hpp"
#include "ohmgraph/electrical.hpp"
#include "ohmgraph/errors.hpp"
#include "ohmgraph/graph.hpp"
#include "ohmgraph/io.hpp"
#include "ohmgraph/matrix.hpp"
#include "ohmgraph/metrics.hpp"
#include "ohmgraph/omega.hpp"
#include "ohmgraph/parallel.hpp"
#include "ohmgraph/plucker.hpp"
#include "ohmgraph/rational.hpp"
#include "ohmgraph/reconstruct.hpp"
#include "ohmgraph/resistance.hpp"
#include "ohmgraph/response.hpp"
#include "ohmgraph/splits.hpp"
#include "ohmgraph/strands.hpp"
#include "ohmgraph/transform.hpp"
