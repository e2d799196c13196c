#include <pybind11/pybind11.h>

PYBIND11_MODULE(_momoa, m) {
    m.doc() = "outer-approximation solver";
}
