#ifndef SYZ_SYZ_HPP
#define SYZ_SYZ_HPP

#include "syz/builders.hpp"
#include "syz/exterior.hpp"
#include "syz/field.hpp"
#include "syz/groebner.hpp"
#include "syz/hilbert.hpp"
#include "syz/ideal.hpp"
#include "syz/io.hpp"
#include "syz/koszul.hpp"
#include "syz/linalg.hpp"
#include "syz/polynomial.hpp"
#include "syz/resolution.hpp"
#include "syz/serialize.hpp"
#include "syz/syzgeo.hpp"
#include "syz/verify.hpp"

#endif
