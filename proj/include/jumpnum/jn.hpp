#pragma once

#include "jumpnum/corpus.hpp"
#include "jumpnum/curve.hpp"
#include "jumpnum/divisor.hpp"
#include "jumpnum/dual_graph.hpp"
#include "jumpnum/errors.hpp"
#include "jumpnum/jumping.hpp"
#include "jumpnum/multiplier.hpp"
#include "jumpnum/parse.hpp"
#include "jumpnum/point_basis.hpp"
#include "jumpnum/puiseux.hpp"
#include "jumpnum/rational.hpp"
#include "jumpnum/structure.hpp"
