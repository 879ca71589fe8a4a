#pragma once

// Umbrella header: exact linear algebra over GF(p), finite-dimensional
// algebras and their modules, torsion theories, nullification complexes,
// and the two Ext-based verifiers.

#include "nullcell/algebra.hpp"
#include "nullcell/derived.hpp"
#include "nullcell/fixtures.hpp"
#include "nullcell/fp.hpp"
#include "nullcell/matrix.hpp"
#include "nullcell/meataxe.hpp"
#include "nullcell/module.hpp"
#include "nullcell/nullification.hpp"
#include "nullcell/poly.hpp"
#include "nullcell/serialize.hpp"
#include "nullcell/structure.hpp"
#include "nullcell/submodule.hpp"
#include "nullcell/subspace.hpp"
#include "nullcell/torsion.hpp"
