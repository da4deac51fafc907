#pragma once

#include "moser/digraph.hpp"
#include "moser/error.hpp"
#include "moser/group.hpp"
#include "moser/kernel_graph.hpp"
#include "moser/mader.hpp"
#include "moser/maxflow.hpp"
#include "moser/moser.hpp"
#include "moser/report.hpp"
#include "moser/rng.hpp"
#include "moser/spec_io.hpp"
#include "moser/transitivity.hpp"
#include "moser/verify.hpp"
#include "moser/vertex_set.hpp"
