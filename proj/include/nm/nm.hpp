#pragma once

// Everything except the JSON-dependent headers (serialize.hpp, verify.hpp).

#include "nm/arith.hpp"
#include "nm/constructions.hpp"
#include "nm/error.hpp"
#include "nm/ideals/istar.hpp"
#include "nm/ideals/koszul.hpp"
#include "nm/ideals/lex_plus_powers.hpp"
#include "nm/ideals/monomial.hpp"
#include "nm/linalg.hpp"
#include "nm/monoid.hpp"
#include "nm/presentation.hpp"
#include "nm/search.hpp"
#include "nm/sumset.hpp"
