#pragma once

#include "smonkit/error.hpp"
#include "smonkit/exactla.hpp"
#include "smonkit/quiver.hpp"
#include "smonkit/algebra.hpp"
#include "smonkit/module.hpp"
#include "smonkit/homological.hpp"
#include "smonkit/duality.hpp"
#include "smonkit/certificate.hpp"
#include "smonkit/random.hpp"
#include "smonkit/catalog.hpp"
#include "smonkit/layered.hpp"
#include "smonkit/nakayama.hpp"
#include "smonkit/harness.hpp"
#include "smonkit/io.hpp"
