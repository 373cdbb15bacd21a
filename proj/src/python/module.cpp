#include <pybind11/pybind11.h>
// placeholder while the core library is brought up; replaced below
PYBIND11_MODULE(_core, m) { m.doc() = "grsdual core"; }
