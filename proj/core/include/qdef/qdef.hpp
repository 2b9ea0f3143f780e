#pragma once

#include "qdef/definiteness2.hpp"
#include "qdef/definiteness3.hpp"
#include "qdef/errors.hpp"
#include "qdef/oracle.hpp"
#include "qdef/polyroots.hpp"
#include "qdef/quartic_poly.hpp"
#include "qdef/scalar.hpp"
#include "qdef/sign_eval.hpp"
#include "qdef/tensors.hpp"
