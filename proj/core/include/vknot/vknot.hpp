#pragma once

#include "vknot/construct.hpp"
#include "vknot/error.hpp"
#include "vknot/gauss.hpp"
#include "vknot/generate.hpp"
#include "vknot/invariants.hpp"
#include "vknot/io.hpp"
#include "vknot/laurent.hpp"
#include "vknot/moves.hpp"
#include "vknot/patterns.hpp"
