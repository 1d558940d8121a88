#pragma once

#include "slimlat/analysis.hpp"
#include "slimlat/canonical.hpp"
#include "slimlat/congruence.hpp"
#include "slimlat/construction.hpp"
#include "slimlat/io.hpp"
#include "slimlat/lattice.hpp"
#include "slimlat/structure.hpp"
