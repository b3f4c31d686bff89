#pragma once

#include "sterngf/exact/bigint.hpp"
#include "sterngf/exact/fit.hpp"
#include "sterngf/exact/linsolve.hpp"
#include "sterngf/exact/modular.hpp"
#include "sterngf/exact/poly.hpp"
#include "sterngf/exact/rational_gf.hpp"

#include "sterngf/cfinite/cfinite.hpp"
#include "sterngf/cfinite/positivity.hpp"
#include "sterngf/cfinite/pv.hpp"

#include "sterngf/core/deadness.hpp"
#include "sterngf/core/evolve.hpp"
#include "sterngf/core/oracle.hpp"
#include "sterngf/core/product_spec.hpp"
#include "sterngf/core/state.hpp"

#include "sterngf/closure/solve.hpp"
#include "sterngf/closure/system.hpp"

#include "sterngf/io/json_out.hpp"
#include "sterngf/io/spec_file.hpp"
