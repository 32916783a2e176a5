#ifndef SKEWGB_SKEWGB_HPP
#define SKEWGB_SKEWGB_HPP

#include <skewgb/endo.hpp>
#include <skewgb/engine.hpp>
#include <skewgb/error.hpp>
#include <skewgb/field.hpp>
#include <skewgb/format.hpp>
#include <skewgb/letterplace.hpp>
#include <skewgb/oracle.hpp>
#include <skewgb/parse.hpp>
#include <skewgb/poly.hpp>
#include <skewgb/problem.hpp>
#include <skewgb/skew.hpp>

#endif
