#pragma once

#include "rpa/scalar.hpp"
#include "rpa/linear.hpp"
#include "rpa/report.hpp"
#include "rpa/algebra.hpp"
#include "rpa/representation.hpp"
#include "rpa/pairing.hpp"
#include "rpa/bialgebra.hpp"
#include "rpa/yang_baxter.hpp"
#include "rpa/prepoisson.hpp"
#include "rpa/jacobi.hpp"
