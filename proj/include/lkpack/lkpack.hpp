#pragma once

#include "lkpack/vertex_set.hpp"
#include "lkpack/graph.hpp"
#include "lkpack/graph6.hpp"
#include "lkpack/profile.hpp"
#include "lkpack/solvers.hpp"
#include "lkpack/bounds.hpp"
#include "lkpack/extremal.hpp"
#include "lkpack/corpus.hpp"
#include "lkpack/campaign.hpp"
