#pragma once

#include "onedpp/exact/matrix.hpp"
#include "onedpp/exact/polynomial.hpp"
#include "onedpp/exact/rational.hpp"
#include "onedpp/exact/series.hpp"
