#pragma once

#include "onedpp/onedep/closure.hpp"
#include "onedpp/onedep/kernel.hpp"
#include "onedpp/onedep/pattern.hpp"
#include "onedpp/onedep/process.hpp"
#include "onedpp/onedep/sequence.hpp"
#include "onedpp/onedep/spec.hpp"
