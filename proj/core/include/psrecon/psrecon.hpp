#pragma once

#include "psrecon/bit_string.hpp"
#include "psrecon/compositions.hpp"
#include "psrecon/cwf.hpp"
#include "psrecon/enumerate.hpp"
#include "psrecon/error.hpp"
#include "psrecon/greedy.hpp"
#include "psrecon/oracle.hpp"
#include "psrecon/uniqueness.hpp"
