#pragma once

#include "braidinv/braid.hpp"
#include "braidinv/free_group.hpp"
#include "braidinv/invariants.hpp"
#include "braidinv/laurent.hpp"
#include "braidinv/matrix.hpp"
#include "braidinv/representations.hpp"
