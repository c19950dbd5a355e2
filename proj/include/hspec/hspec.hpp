#pragma once

#include "hspec/bounds.hpp"
#include "hspec/certify.hpp"
#include "hspec/error.hpp"
#include "hspec/gershgorin.hpp"
#include "hspec/io.hpp"
#include "hspec/report.hpp"
#include "hspec/spectral.hpp"
#include "hspec/tensor.hpp"
#include "hspec/univariate.hpp"
