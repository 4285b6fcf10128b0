#pragma once

#include "mlpade/errors.hpp"
#include "mlpade/gamma.hpp"
#include "mlpade/poly.hpp"
#include "mlpade/linalg.hpp"
#include "mlpade/pade.hpp"
#include "mlpade/pfd.hpp"
#include "mlpade/inverse.hpp"
#include "mlpade/matml.hpp"
#include "mlpade/oracle.hpp"
#include "mlpade/bench.hpp"
