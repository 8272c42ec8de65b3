#pragma once

#include "errors.hpp"
#include "generators.hpp"
#include "json_io.hpp"
#include "matrix_core.hpp"
#include "order_relations.hpp"
#include "rng.hpp"
#include "spectral_calculus.hpp"
#include "spectral_family.hpp"
#include "theorem_suite.hpp"
#include "tolerances.hpp"
