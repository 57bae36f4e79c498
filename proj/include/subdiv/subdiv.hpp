#pragma once

#include "subdiv/bigint.hpp"
#include "subdiv/bits.hpp"
#include "subdiv/bounds.hpp"
#include "subdiv/constructions.hpp"
#include "subdiv/density.hpp"
#include "subdiv/errors.hpp"
#include "subdiv/families.hpp"
#include "subdiv/graph.hpp"
#include "subdiv/harness.hpp"
#include "subdiv/io.hpp"
#include "subdiv/iso.hpp"
#include "subdiv/limits.hpp"
#include "subdiv/parallel.hpp"
#include "subdiv/pattern.hpp"
#include "subdiv/report_json.hpp"
#include "subdiv/subdivision.hpp"
