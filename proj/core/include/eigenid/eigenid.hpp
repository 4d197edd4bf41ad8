#pragma once

#include "eigenid/errors.hpp"
#include "eigenid/experiments.hpp"
#include "eigenid/golub.hpp"
#include "eigenid/identity.hpp"
#include "eigenid/io.hpp"
#include "eigenid/oracle.hpp"
#include "eigenid/projection.hpp"
#include "eigenid/spectral.hpp"
#include "eigenid/types.hpp"
