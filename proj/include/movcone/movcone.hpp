#pragma once

// Umbrella header.

#include "movcone/errors.hpp"
#include "movcone/rational.hpp"
#include "movcone/quad_ext.hpp"
#include "movcone/matrix.hpp"
#include "movcone/linalg.hpp"
#include "movcone/permutation.hpp"
#include "movcone/coxeter.hpp"
#include "movcone/words.hpp"
#include "movcone/budget.hpp"
#include "movcone/bir_group.hpp"
#include "movcone/cone_atlas.hpp"
#include "movcone/symmetric_case.hpp"
#include "movcone/json_io.hpp"
#include "movcone/svg.hpp"
#include "movcone/verify.hpp"
