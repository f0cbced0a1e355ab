#pragma once

#include "voakit/exact.hpp"
#include "voakit/rootsys.hpp"
#include "voakit/liealg.hpp"
#include "voakit/uea.hpp"
#include "voakit/verma.hpp"
#include "voakit/affine.hpp"
#include "voakit/classify.hpp"
