#pragma once

// Umbrella header.
//
// krphase builds matrix representations of the graded "real" Clifford
// algebras Cliff_{a,b}, evaluates the associated Dirac-type Bloch
// Hamiltonians H_m on the d-torus, and computes their complete KR-theory
// invariant vector (one integer strong invariant plus Z/2 weak invariants
// for coordinate subsets of size one and two) three ways: by fixed-point
// enumeration, by closed-form binomials, and by a numerical mapping-degree
// oracle.

#include "krphase/antiunitary.hpp"
#include "krphase/bloch.hpp"
#include "krphase/clifford.hpp"
#include "krphase/errors.hpp"
#include "krphase/invariants.hpp"
#include "krphase/linalg.hpp"
#include "krphase/oracle.hpp"
#include "krphase/parallel.hpp"
#include "krphase/serialize.hpp"
#include "krphase/symmetry.hpp"
