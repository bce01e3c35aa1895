#pragma once

#include "zkit/compactness.hpp"
#include "zkit/errors.hpp"
#include "zkit/families.hpp"
#include "zkit/homotopy.hpp"
#include "zkit/minkowski.hpp"
#include "zkit/onedimset.hpp"
#include "zkit/quadext.hpp"
#include "zkit/rat.hpp"
#include "zkit/region.hpp"
#include "zkit/rng.hpp"
#include "zkit/serialization.hpp"
#include "zkit/zeno.hpp"
#include "zkit/zfunction.hpp"
