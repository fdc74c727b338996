#pragma once

#include "doctest.h"
#include "rp2braid/word.hpp"

namespace doctest {
template <>
struct StringMaker<rp2braid::Word> {
    static String convert(const rp2braid::Word& w) { return ("[" + w.str() + "]").c_str(); }
};
}  // namespace doctest
