#pragma once

#include <braidchow/character_table.hpp>
#include <braidchow/combinatorics.hpp>
#include <braidchow/graded_series.hpp>
#include <braidchow/level_tree.hpp>
#include <braidchow/moduli.hpp>
#include <braidchow/partition.hpp>
#include <braidchow/poly.hpp>
#include <braidchow/rational.hpp>
#include <braidchow/solver.hpp>
#include <braidchow/symseries.hpp>
