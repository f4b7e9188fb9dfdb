#pragma once

#include "cycov/bruteforce.hpp"
#include "cycov/cohomology.hpp"
#include "cycov/cover.hpp"
#include "cycov/errors.hpp"
#include "cycov/hurwitz.hpp"
#include "cycov/jsonio.hpp"
#include "cycov/matrix.hpp"
#include "cycov/oracle.hpp"
#include "cycov/permutation.hpp"
#include "cycov/poly.hpp"
#include "cycov/ranks.hpp"
#include "cycov/rational.hpp"
#include "cycov/series.hpp"

/// cycov: exact invariants of families of cyclic covers of the line.
namespace cycov {}
