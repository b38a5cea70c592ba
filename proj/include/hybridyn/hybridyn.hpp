#ifndef HYBRIDYN_HYBRIDYN_HPP
#define HYBRIDYN_HYBRIDYN_HPP

#include "bracket.hpp"
#include "coeff.hpp"
#include "consistency.hpp"
#include "evolution.hpp"
#include "expr.hpp"
#include "oracle.hpp"
#include "oscillator.hpp"
#include "parse.hpp"
#include "print.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "scheme.hpp"

#endif
