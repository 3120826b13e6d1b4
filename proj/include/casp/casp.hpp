#pragma once

#include "casp/classical.hpp"
#include "casp/desugar.hpp"
#include "casp/engine.hpp"
#include "casp/error.hpp"
#include "casp/flatten.hpp"
#include "casp/focus.hpp"
#include "casp/generate.hpp"
#include "casp/model.hpp"
#include "casp/oracle.hpp"
#include "casp/parser.hpp"
#include "casp/qbf.hpp"
#include "casp/qbf_compile.hpp"
#include "casp/simulate.hpp"
