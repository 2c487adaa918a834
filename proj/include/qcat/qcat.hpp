#pragma once

#include "qcat/error.hpp"
#include "qcat/report.hpp"
#include "qcat/extended.hpp"
#include "qcat/lattice.hpp"
#include "qcat/quantaloid.hpp"
#include "qcat/table_quantaloid.hpp"
#include "qcat/lawvere.hpp"
#include "qcat/category.hpp"
#include "qcat/presheaf.hpp"
#include "qcat/doctrine.hpp"
#include "qcat/hausdorff.hpp"
#include "qcat/random.hpp"
#include "qcat/fixtures.hpp"
#include "qcat/laws.hpp"
#include "qcat/io.hpp"
