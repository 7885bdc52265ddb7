#pragma once

#include "modorbit/action.hpp"
#include "modorbit/checked.hpp"
#include "modorbit/counting.hpp"
#include "modorbit/error.hpp"
#include "modorbit/orbits.hpp"
#include "modorbit/qfield.hpp"
#include "modorbit/words.hpp"
