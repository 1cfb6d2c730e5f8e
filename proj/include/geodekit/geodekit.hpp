#pragma once

#include "geodekit/bounds.hpp"
#include "geodekit/certificates.hpp"
#include "geodekit/codec.hpp"
#include "geodekit/distance_oracle.hpp"
#include "geodekit/families.hpp"
#include "geodekit/family_spec.hpp"
#include "geodekit/graph.hpp"
#include "geodekit/limits.hpp"
#include "geodekit/product.hpp"
#include "geodekit/small_graphs.hpp"
#include "geodekit/solvers.hpp"
#include "geodekit/vertex_set.hpp"
