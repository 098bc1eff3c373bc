#pragma once

#include "surflines/catalog/arrangement.hpp"
#include "surflines/catalog/catalog.hpp"
#include "surflines/catalog/profile.hpp"
#include "surflines/errors.hpp"
#include "surflines/exactnum/cyclotomic.hpp"
#include "surflines/exactnum/linalg.hpp"
#include "surflines/exactnum/polynomial.hpp"
#include "surflines/exactnum/rational.hpp"
#include "surflines/harbourne/bauer_search.hpp"
#include "surflines/harbourne/extremal_search.hpp"
#include "surflines/harbourne/harbourne.hpp"
#include "surflines/incidence/incidence.hpp"
#include "surflines/projgeom/line.hpp"
#include "surflines/projgeom/point.hpp"
