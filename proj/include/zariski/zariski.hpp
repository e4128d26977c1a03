#pragma once

// Exact symbolic computation over groups: free and abelian backends, the
// binary tree's automorphisms and their semidirect product with its free
// group, monomials over a group extended by one variable, and the
// constructive searches built on top (separating pairs, separation
// witnesses, co-zero subgroups, avoidance sets, symmetric sets).

#include "zariski/abelian.hpp"
#include "zariski/avoidance.hpp"
#include "zariski/backend_io.hpp"
#include "zariski/enumeration.hpp"
#include "zariski/errors.hpp"
#include "zariski/free_group.hpp"
#include "zariski/monomial.hpp"
#include "zariski/random.hpp"
#include "zariski/report.hpp"
#include "zariski/tree.hpp"
#include "zariski/tree_groups.hpp"
#include "zariski/tree_separation.hpp"
#include "zariski/witnesses.hpp"
#include "zariski/word.hpp"
