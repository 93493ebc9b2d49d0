#pragma once

#include "angleworks/exact.hpp"

#include <doctest.h>

namespace doctest {
template <>
struct StringMaker<aw::PiNumber> {
    static String convert(const aw::PiNumber& x) { return x.to_string().c_str(); }
};
}  // namespace doctest
