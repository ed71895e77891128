#pragma once

#include "isoclass/errors.hpp"
#include "isoclass/arith.hpp"
#include "isoclass/discforms.hpp"
#include "isoclass/unimodular.hpp"
#include "isoclass/classnumber.hpp"
#include "isoclass/latgeom.hpp"
#include "isoclass/theta.hpp"
#include "isoclass/embeddings.hpp"
#include "isoclass/ihs.hpp"
