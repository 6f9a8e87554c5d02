#pragma once

#include "folia/bigint.hpp"
#include "folia/rational.hpp"
#include "folia/varpool.hpp"
#include "folia/mpoly.hpp"
#include "folia/fraction.hpp"
#include "folia/ring.hpp"
#include "folia/resultant.hpp"
#include "folia/factor.hpp"
#include "folia/plane.hpp"
#include "folia/divisor.hpp"
#include "folia/pullback.hpp"
#include "folia/solve.hpp"
#include "folia/local.hpp"
#include "folia/critical.hpp"
#include "folia/catalog.hpp"
#include "folia/parse.hpp"
