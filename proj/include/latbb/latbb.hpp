#pragma once

// Everything in one include.

#include "latbb/integer.hpp"
#include "latbb/lattice.hpp"
#include "latbb/staircase.hpp"
#include "latbb/minimals.hpp"
#include "latbb/region_graph.hpp"
#include "latbb/affine.hpp"
#include "latbb/compatibility.hpp"
#include "latbb/border_basis.hpp"
#include "latbb/dim2.hpp"
#include "latbb/oracle.hpp"
#include "latbb/render.hpp"
#include "latbb/svg.hpp"
