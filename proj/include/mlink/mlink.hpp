#pragma once

#include "mlink/arena.hpp"
#include "mlink/baseline.hpp"
#include "mlink/cc.hpp"
#include "mlink/cost_oracle.hpp"
#include "mlink/extended_cost.hpp"
#include "mlink/generators.hpp"
#include "mlink/instance_io.hpp"
#include "mlink/parametric.hpp"
#include "mlink/pbf.hpp"
#include "mlink/probe.hpp"
#include "mlink/segmentation.hpp"
#include "mlink/smawk.hpp"
#include "mlink/spt.hpp"
#include "mlink/types.hpp"
#include "mlink/verify.hpp"
#include "mlink/workspace.hpp"
