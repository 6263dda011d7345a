#pragma once

#include <antilimit/antilimit_solver.hpp>
#include <antilimit/error.hpp>
#include <antilimit/high_precision.hpp>
#include <antilimit/oracle.hpp>
#include <antilimit/pe_engine.hpp>
#include <antilimit/polynomial.hpp>
#include <antilimit/rational.hpp>
#include <antilimit/reference_tables.hpp>
#include <antilimit/render.hpp>
#include <antilimit/roots.hpp>
#include <antilimit/series.hpp>
