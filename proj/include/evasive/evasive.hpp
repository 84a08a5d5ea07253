#pragma once

// Umbrella header.

#include "evasive/affine.hpp"
#include "evasive/ap_free.hpp"
#include "evasive/awm.hpp"
#include "evasive/bounds.hpp"
#include "evasive/coloring.hpp"
#include "evasive/extension.hpp"
#include "evasive/field.hpp"
#include "evasive/linear_rep.hpp"
#include "evasive/maximal.hpp"
#include "evasive/partition.hpp"
#include "evasive/poly.hpp"
#include "evasive/projective.hpp"
#include "evasive/rng.hpp"
#include "evasive/serialize.hpp"
#include "evasive/slope.hpp"
#include "evasive/subgraphs.hpp"
#include "evasive/turan.hpp"
#include "evasive/util.hpp"
