#pragma once

#include "tensorrest/bundle.hpp"
#include "tensorrest/catfile.hpp"
#include "tensorrest/error.hpp"
#include "tensorrest/fincat.hpp"
#include "tensorrest/generators.hpp"
#include "tensorrest/ids.hpp"
#include "tensorrest/iso_search.hpp"
#include "tensorrest/law_report.hpp"
#include "tensorrest/monoidal.hpp"
#include "tensorrest/report.hpp"
#include "tensorrest/restriction.hpp"
#include "tensorrest/sconstr.hpp"
#include "tensorrest/semilattice.hpp"
