#pragma once

#include "argcount/classical.hpp"
#include "argcount/counting.hpp"
#include "argcount/framework.hpp"
#include "argcount/io.hpp"
#include "argcount/random.hpp"
#include "argcount/ranking.hpp"
#include "argcount/walks.hpp"
