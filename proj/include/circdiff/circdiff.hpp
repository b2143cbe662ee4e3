#pragma once

#include "circdiff/core.hpp"
#include "circdiff/poly.hpp"
#include "circdiff/linalg.hpp"
#include "circdiff/circulant.hpp"
#include "circdiff/differentiator.hpp"
#include "circdiff/inequalities.hpp"
#include "circdiff/majorization.hpp"
#include "circdiff/parse.hpp"
#include "circdiff/io.hpp"
#include "circdiff/ensemble.hpp"
