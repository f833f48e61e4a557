#pragma once

#include "injword/bounds.hpp"
#include "injword/chain_complex.hpp"
#include "injword/chains.hpp"
#include "injword/combinatorics.hpp"
#include "injword/confspace.hpp"
#include "injword/ficat.hpp"
#include "injword/fimplus.hpp"
#include "injword/integer.hpp"
#include "injword/json_io.hpp"
#include "injword/liealg.hpp"
#include "injword/report.hpp"
#include "injword/repth.hpp"
#include "injword/smith.hpp"
#include "injword/sparse_matrix.hpp"
#include "injword/symrep.hpp"

namespace injword {
inline constexpr const char* version = "0.1.0";
}
