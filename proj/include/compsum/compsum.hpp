#pragma once

#include "compsum/composition.hpp"
#include "compsum/identities.hpp"
#include "compsum/polynomial.hpp"
#include "compsum/random.hpp"
#include "compsum/rational.hpp"
#include "compsum/series.hpp"
#include "compsum/simplex.hpp"
#include "compsum/spectral.hpp"
