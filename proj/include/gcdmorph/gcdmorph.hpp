#pragma once

#include "gcdmorph/catalog.hpp"
#include "gcdmorph/codec.hpp"
#include "gcdmorph/core.hpp"
#include "gcdmorph/errors.hpp"
#include "gcdmorph/generator.hpp"
#include "gcdmorph/validator.hpp"
