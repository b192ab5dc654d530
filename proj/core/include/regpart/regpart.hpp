#pragma once

#include "regpart/characters.hpp"
#include "regpart/chartable.hpp"
#include "regpart/cyclotomic.hpp"
#include "regpart/glaisher.hpp"
#include "regpart/kostka.hpp"
#include "regpart/matrix.hpp"
#include "regpart/numeric.hpp"
#include "regpart/partition.hpp"
#include "regpart/qpoly.hpp"
#include "regpart/series.hpp"
#include "regpart/statistics.hpp"
#include "regpart/symfunc.hpp"
