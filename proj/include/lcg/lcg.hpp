#ifndef LCG_LCG_HPP
#define LCG_LCG_HPP

#include "field.hpp"
#include "series.hpp"
#include "format.hpp"
#include "graph.hpp"
#include "operator.hpp"
#include "spectra.hpp"
#include "cheeger.hpp"
#include "walk.hpp"

#endif // LCG_LCG_HPP
