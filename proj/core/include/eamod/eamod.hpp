#pragma once

#include "eamod/error.hpp"
#include "eamod/gf.hpp"
#include "eamod/io.hpp"
#include "eamod/jordan.hpp"
#include "eamod/linalg.hpp"
#include "eamod/modrep.hpp"
#include "eamod/parallel.hpp"
#include "eamod/poly.hpp"
#include "eamod/rng.hpp"
#include "eamod/symrep.hpp"
#include "eamod/variety.hpp"
