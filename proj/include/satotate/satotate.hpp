#pragma once

#include "arith.hpp"
#include "bounds.hpp"
#include "characters.hpp"
#include "coeffs.hpp"
#include "constants.hpp"
#include "empirics.hpp"
#include "errors.hpp"
#include "extremal.hpp"
#include "json_io.hpp"
#include "modular.hpp"
#include "quadrature.hpp"
#include "serre.hpp"
#include "sieve.hpp"
#include "testfn.hpp"
