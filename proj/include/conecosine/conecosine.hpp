#pragma once

#include "conecosine/cone.hpp"
#include "conecosine/cosine.hpp"
#include "conecosine/errors.hpp"
#include "conecosine/exponent.hpp"
#include "conecosine/gamma.hpp"
#include "conecosine/hpoly.hpp"
#include "conecosine/linalg.hpp"
#include "conecosine/mc.hpp"
#include "conecosine/rng.hpp"
#include "conecosine/stiefel.hpp"
#include "conecosine/zeta.hpp"
