#pragma once

#include "ktuple/domatic.hpp"
#include "ktuple/domination.hpp"
#include "ktuple/errors.hpp"
#include "ktuple/generators.hpp"
#include "ktuple/graph.hpp"
#include "ktuple/graph_io.hpp"
#include "ktuple/invariants.hpp"
#include "ktuple/report.hpp"
#include "ktuple/theorems.hpp"
#include "ktuple/vertex_set.hpp"
