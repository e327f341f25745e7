#pragma once

// Convenience umbrella: pulls in the whole library.

#include "qspectra/audit.hpp"
#include "qspectra/bigint.hpp"
#include "qspectra/canonical.hpp"
#include "qspectra/certify.hpp"
#include "qspectra/enumerate.hpp"
#include "qspectra/errors.hpp"
#include "qspectra/factor.hpp"
#include "qspectra/families.hpp"
#include "qspectra/graph.hpp"
#include "qspectra/identities.hpp"
#include "qspectra/matrix.hpp"
#include "qspectra/oracles.hpp"
#include "qspectra/parallel.hpp"
#include "qspectra/polynomial.hpp"
#include "qspectra/report.hpp"
#include "qspectra/search.hpp"
#include "qspectra/theorems.hpp"
