#pragma once

#include "polyc/canonical.hpp"
#include "polyc/certificate.hpp"
#include "polyc/cnf.hpp"
#include "polyc/coloring.hpp"
#include "polyc/constructions.hpp"
#include "polyc/errors.hpp"
#include "polyc/hg_format.hpp"
#include "polyc/hypergraph.hpp"
#include "polyc/p_search.hpp"
#include "polyc/searches.hpp"
#include "polyc/structure.hpp"
#include "polyc/sweep.hpp"
#include "polyc/threshold.hpp"
#include "polyc/triangle_cover.hpp"
#include "polyc/verify.hpp"
#include "polyc/vertex_set.hpp"
