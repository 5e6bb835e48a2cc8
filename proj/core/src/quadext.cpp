#include "finv/quadext.hpp"

namespace finv {

namespace {

std::string s_part(const Rational& im) {
    if (im == 1) return "s";
    if (im == -1) return "-s";
    return to_fraction_string(im) + "*s";
}

}  // namespace

std::string to_string(const QuadExt& x) {
    if (x.im == 0) return to_fraction_string(x.re);
    if (x.re == 0) return s_part(x.im);
    std::string tail = x.im > 0 ? " + " + s_part(x.im)
                                : " - " + s_part(-x.im);
    return to_fraction_string(x.re) + tail;
}

}  // namespace finv
