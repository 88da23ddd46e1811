// Umbrella header.

#ifndef NORMGEN_NORMGEN_HPP_
#define NORMGEN_NORMGEN_HPP_

#include "bruhat.hpp"
#include "certificate.hpp"
#include "conjsolver.hpp"
#include "decomposer.hpp"
#include "error.hpp"
#include "field.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "random.hpp"
#include "rootdata.hpp"
#include "torus.hpp"

#endif  // NORMGEN_NORMGEN_HPP_
