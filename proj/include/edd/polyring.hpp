#pragma once

#include "edd/polyring/forms.hpp"
#include "edd/polyring/resultant.hpp"
#include "edd/polyring/series.hpp"
#include "edd/polyring/univariate.hpp"
