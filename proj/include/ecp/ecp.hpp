#pragma once

#include "ecp/acceptance.hpp"
#include "ecp/analysis.hpp"
#include "ecp/bench.hpp"
#include "ecp/core.hpp"
#include "ecp/external.hpp"
#include "ecp/objectives.hpp"
#include "ecp/optimizers.hpp"
#include "ecp/trace_json.hpp"
