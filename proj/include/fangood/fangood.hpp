#pragma once

#include "fangood/bounds.hpp"
#include "fangood/certificate.hpp"
#include "fangood/coloring.hpp"
#include "fangood/coloring_io.hpp"
#include "fangood/errors.hpp"
#include "fangood/graph.hpp"
#include "fangood/graph6.hpp"
#include "fangood/lemmas.hpp"
#include "fangood/matching.hpp"
#include "fangood/oracle.hpp"
#include "fangood/solvers.hpp"
#include "fangood/sparse.hpp"
#include "fangood/subgraph.hpp"
