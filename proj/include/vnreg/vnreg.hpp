#ifndef VNREG_VNREG_HPP
#define VNREG_VNREG_HPP

#include "bits.hpp"
#include "local_rule.hpp"
#include "periodic.hpp"
#include "dfa.hpp"
#include "sofic.hpp"
#include "weak_inverse.hpp"
#include "preimages.hpp"
#include "asymptotic.hpp"
#include "certificate.hpp"
#include "spp.hpp"
#include "forcing.hpp"
#include "search.hpp"
#include "injectivity.hpp"
#include "classify.hpp"
#include "ruledsl.hpp"
#include "catalog.hpp"
#include "serialize.hpp"
#include "reproduce.hpp"

#endif
