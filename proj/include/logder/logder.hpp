#pragma once

#include "logder/arrangement.hpp"
#include "logder/catalog.hpp"
#include "logder/cyclotomic.hpp"
#include "logder/derivations.hpp"
#include "logder/errors.hpp"
#include "logder/freeness.hpp"
#include "logder/groebner.hpp"
#include "logder/intpoly.hpp"
#include "logder/io.hpp"
#include "logder/lattice.hpp"
#include "logder/linalg.hpp"
#include "logder/modvec.hpp"
#include "logder/monomial.hpp"
#include "logder/parallel.hpp"
#include "logder/polynomial.hpp"
#include "logder/rational.hpp"
