#pragma once

#include "fp.hpp"
#include "poly.hpp"
#include "extfield.hpp"
#include "quadfield.hpp"
#include "linalg.hpp"
#include "cyclotomic.hpp"
#include "additive_code.hpp"
#include "symplectic.hpp"
#include "distance.hpp"
#include "quantum.hpp"
#include "search.hpp"
