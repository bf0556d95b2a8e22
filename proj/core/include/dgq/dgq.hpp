#pragma once

#include "dgq/cy_structure.hpp"
#include "dgq/differential.hpp"
#include "dgq/element.hpp"
#include "dgq/errors.hpp"
#include "dgq/ginzburg.hpp"
#include "dgq/homology.hpp"
#include "dgq/koszul.hpp"
#include "dgq/linalg.hpp"
#include "dgq/path.hpp"
#include "dgq/quiver.hpp"
#include "dgq/rational.hpp"
#include "dgq/serialize.hpp"
