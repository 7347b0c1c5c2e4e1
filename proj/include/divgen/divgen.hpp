#pragma once

#include "divgen/augmented.hpp"
#include "divgen/bit_vector.hpp"
#include "divgen/collection.hpp"
#include "divgen/constructive.hpp"
#include "divgen/error.hpp"
#include "divgen/io.hpp"
#include "divgen/maxmin.hpp"
#include "divgen/metrics.hpp"
#include "divgen/permutation.hpp"
#include "divgen/progressive_gap.hpp"
