#pragma once

// Umbrella header: exact certified bounds for fat-point linear systems in
// the plane (alpha lower bounds, tau upper bounds, Hilbert-function and
// resolution verification, figure datasets, and the generic-points oracle).

#include "fatpoints/core.hpp"
#include "fatpoints/hilbert.hpp"
#include "fatpoints/engine.hpp"
#include "fatpoints/bounds.hpp"
#include "fatpoints/verify.hpp"
#include "fatpoints/figures.hpp"
#include "fatpoints/oracle.hpp"
