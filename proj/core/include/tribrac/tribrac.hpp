#pragma once

#include "tribrac/bridge.hpp"
#include "tribrac/chain.hpp"
#include "tribrac/cochain.hpp"
#include "tribrac/coloring.hpp"
#include "tribrac/diagram.hpp"
#include "tribrac/error.hpp"
#include "tribrac/examples.hpp"
#include "tribrac/homology.hpp"
#include "tribrac/json_io.hpp"
#include "tribrac/local_biquandle.hpp"
#include "tribrac/matrix.hpp"
#include "tribrac/polynomial.hpp"
#include "tribrac/tensor.hpp"
#include "tribrac/term.hpp"
#include "tribrac/tribracket.hpp"
