#pragma once

#include "tdgame/criticality.hpp"
#include "tdgame/enumerate.hpp"
#include "tdgame/errors.hpp"
#include "tdgame/game.hpp"
#include "tdgame/graph.hpp"
#include "tdgame/graph6.hpp"
#include "tdgame/parallel.hpp"
#include "tdgame/strategy.hpp"
#include "tdgame/verify.hpp"
#include "tdgame/vertex_set.hpp"
