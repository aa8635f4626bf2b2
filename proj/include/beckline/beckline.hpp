#pragma once

#include "analysis.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "geometry.hpp"
#include "incidence.hpp"
#include "point_file.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "search.hpp"
