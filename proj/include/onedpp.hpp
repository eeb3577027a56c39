#pragma once

#include "onedpp/catalog.hpp"
#include "onedpp/connectivity.hpp"
#include "onedpp/exact.hpp"
#include "onedpp/groupcarries.hpp"
#include "onedpp/io.hpp"
#include "onedpp/onedep.hpp"
#include "onedpp/oracle.hpp"
#include "onedpp/random.hpp"
#include "onedpp/stats.hpp"
#include "onedpp/symfunc.hpp"
#include "onedpp/version.hpp"
