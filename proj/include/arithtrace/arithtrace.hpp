#pragma once

#include "arithtrace/borel_form.hpp"
#include "arithtrace/digraph.hpp"
#include "arithtrace/dynamics.hpp"
#include "arithtrace/errors.hpp"
#include "arithtrace/finite_group.hpp"
#include "arithtrace/hilbert.hpp"
#include "arithtrace/homology.hpp"
#include "arithtrace/integer.hpp"
#include "arithtrace/laurent.hpp"
#include "arithtrace/linalg.hpp"
#include "arithtrace/matrix.hpp"
#include "arithtrace/modpoly.hpp"
#include "arithtrace/number_field.hpp"
#include "arithtrace/padic.hpp"
#include "arithtrace/places.hpp"
#include "arithtrace/poly.hpp"
#include "arithtrace/primes.hpp"
#include "arithtrace/quaternion.hpp"
#include "arithtrace/rep.hpp"
