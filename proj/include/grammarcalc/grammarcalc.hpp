#pragma once

#include "grammarcalc/errors.hpp"
#include "grammarcalc/rational.hpp"
#include "grammarcalc/symbol.hpp"
#include "grammarcalc/monomial.hpp"
#include "grammarcalc/polynomial.hpp"
#include "grammarcalc/series.hpp"
#include "grammarcalc/grammar.hpp"
#include "grammarcalc/permutations.hpp"
#include "grammarcalc/recurrences.hpp"
#include "grammarcalc/catalog.hpp"
#include "grammarcalc/identities.hpp"
