#ifndef WAVELIFT_WAVELIFT_HPP
#define WAVELIFT_WAVELIFT_HPP

#include "wavelift/error.hpp"
#include "wavelift/filter.hpp"
#include "wavelift/spectral.hpp"
#include "wavelift/cascade.hpp"
#include "wavelift/families.hpp"
#include "wavelift/io.hpp"

#endif  // WAVELIFT_WAVELIFT_HPP
