#pragma once

#include "atlas.hpp"
#include "canon.hpp"
#include "critical.hpp"
#include "cyc_ring.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "hom.hpp"
#include "json_io.hpp"
#include "parallel.hpp"
#include "recognize.hpp"
#include "sp_expr.hpp"
#include "verify.hpp"
