#pragma once

#include "bistar/coloring.hpp"
#include "bistar/constructions.hpp"
#include "bistar/detect.hpp"
#include "bistar/errors.hpp"
#include "bistar/formulas.hpp"
#include "bistar/pattern.hpp"
#include "bistar/sat.hpp"
#include "bistar/search.hpp"
#include "bistar/table.hpp"
#include "bistar/vertex_set.hpp"
#include "bistar/witness.hpp"
