#pragma once

#include "pejm/blocks.hpp"
#include "pejm/characters.hpp"
#include "pejm/errors.hpp"
#include "pejm/gclass.hpp"
#include "pejm/jantzen.hpp"
#include "pejm/kl.hpp"
#include "pejm/odd_reflections.hpp"
#include "pejm/rational.hpp"
#include "pejm/serialize.hpp"
#include "pejm/structure.hpp"
#include "pejm/weight.hpp"
#include "pejm/weights.hpp"
#include "pejm/weyl.hpp"
