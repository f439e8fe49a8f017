#pragma once

// Exact coefficient rings: Laurent polynomials in v (v^2 = q^{-1}), their
// specializations at numeric q, cyclotomic integers, characters and
// truncated power series in u = q^{-1}.

#include "sphecke/exactalg/character.hpp"
#include "sphecke/exactalg/cyclotomic.hpp"
#include "sphecke/exactalg/integer.hpp"
#include "sphecke/exactalg/laurent.hpp"
#include "sphecke/exactalg/qpolynomial.hpp"
#include "sphecke/exactalg/series.hpp"
#include "sphecke/exactalg/surd.hpp"
