#pragma once

#include "cochordal/betti.hpp"
#include "cochordal/bigint.hpp"
#include "cochordal/chordality.hpp"
#include "cochordal/constructible.hpp"
#include "cochordal/crosscheck.hpp"
#include "cochordal/error.hpp"
#include "cochordal/graph.hpp"
#include "cochordal/hochster.hpp"
#include "cochordal/io.hpp"
#include "cochordal/number_theory.hpp"
#include "cochordal/type_sequence.hpp"
#include "cochordal/zerodiv.hpp"
